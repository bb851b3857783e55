#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "melon/laurent_poly.hpp"
#include "melon/partitions.hpp"
#include "melon/schur.hpp"
#include "melon/serialize.hpp"

namespace melon {

/// Outcome of one exact identity check. `equal` is true exactly when lhs
/// and rhs are the same canonical polynomial.
struct IdentityReport {
  std::string name;
  Json params = Json::object();
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool equal = false;
  double elapsed_ms = 0.0;

  /// One JSON object: {name, params, lhs, rhs, equal, elapsed_ms}.
  Json to_json() const;
  /// Same without elapsed_ms; stable for identical parameters.
  Json to_json_deterministic() const;
};

/// sum_{lambda in M^N} S(a) S(b) against det(M_kj) / (V(a) V(b)) with
/// M_kj = (1 - (x_k y_j)^{M+N}) / (1 - x_k y_j), x_k y_j = q^{a_k+b_j}.
/// Throws DegeneratePoint if a point repeats an exponent or a_k + b_j = 0.
IdentityReport verify_binet_cauchy(std::size_t n, int m, const GeometricPoint& a, const GeometricPoint& b);

/// The specialization a = (0..N-1), b = (1..N).
IdentityReport verify_q_binet_cauchy(std::size_t n, int m);

/// V^-1 V^-1 det((1 - q^{(M+N)(j+k-1)}) / (1 - q^{j+k-1})) against
/// prod_{j,k<=N} (1 - q^{M+j+k-1}) / (1 - q^{j+k-1}).
IdentityReport verify_kuperberg(std::size_t n, int m);

/// Schur sum against q^{NM(1-M)/2} det([2N+i-1 choose N+j-1])_{M x M}.
/// If the stated prefactor fails but its sign flip holds, the report
/// carries the working exponent in params.prefactor_exponent.
IdentityReport verify_qbinomial_det(std::size_t n, int m);

/// sum_{lambda in M^{N-k}} S_lambda(a) S_lambda-hat(b) against
/// (prod_l x_l^{-k}) det(M~) / (V_{N-k}(a) V_N(b)); rows r > N-k of M~ are
/// (y_j^{N-r})_j.
IdentityReport verify_deviation_binet_cauchy(std::size_t n, int m, std::size_t k, const GeometricPoint& a,
                                             const GeometricPoint& b);

/// Reports, in order:
///   watermelon.enumeration_vs_schur_sum
///   watermelon.enumeration_vs_product
///   watermelon.product_vs_det_form1
///   watermelon.product_vs_det_form2
///   watermelon.schur_specialization   (q^{-c} S_{L^N}(1..q^{N+M-1}), c found empirically)
///   watermelon.horizontal_reading_offset (sum_j (j-1) m_j - |w| constant)
std::vector<IdentityReport> verify_watermelon_suite(std::size_t n, int m, std::size_t k);

/// Three routes to the number of C-nests of shape lambda. lhs packs the
/// binomial determinant in both slots (q^0 and q^1); rhs holds the nest
/// count at q^0 and S_lambda(1, ..., 1) at q^1.
IdentityReport verify_gessel_viennot(const Partition& lambda, std::size_t n);

/// Z_q(N, L, M) by enumeration against watermelon_genfunc(N, M, N - L).
IdentityReport verify_zq_equals_w(std::size_t n, std::size_t l, int m);

/// Five routes for S_lambda(1, q, ..., q^{m-1}) compared pairwise against the
/// bialternant: one report per route.
std::vector<IdentityReport> verify_schur_routes(const Partition& lambda, long m);

/// Fixed exponent tuples for generic-point Binet-Cauchy checks, N = 1..3.
/// Two pairs per N; one of them uses negative exponents.
std::vector<std::pair<GeometricPoint, GeometricPoint>> golden_binet_cauchy_points(std::size_t n);

/// Seeded random pair of points with distinct exponents in [-range, range]
/// and a_k + b_j != 0.
std::pair<GeometricPoint, GeometricPoint> random_binet_cauchy_points(std::size_t n, std::uint64_t seed,
                                                                     int range = 6);

/// A unit of work for the suite runner.
struct VerifyTask {
  std::string label;
  std::function<std::vector<IdentityReport>()> run;
};

/// Runs tasks on at most `workers` threads (0 picks from MELON_WORKERS or
/// hardware concurrency). Results come back in task order.
std::vector<IdentityReport> run_tasks(const std::vector<VerifyTask>& tasks, unsigned workers = 0);

/// Worker count from the MELON_WORKERS environment variable, falling back
/// to the hardware concurrency.
unsigned default_worker_count();

}  // namespace melon
