#pragma once

#include <optional>
#include <vector>

#include "melon/laurent_poly.hpp"
#include "melon/partitions.hpp"
#include "melon/tableau.hpp"

namespace melon {

// Lattice conventions used throughout this header.
//
// Vertical lines x_1..x_N carry north steps. A C-nest path i (i = 1..N,
// counted from the top) runs from C_i = (N-i+1, N-i) to (1, mu_i) with
// mu_i = lambda_i + N - i; its north steps on line x_j are the occurrences
// of letter N-j+1 in row i of a semistandard tableau of shape lambda.
//
// A B-nest path i runs from (1, mu_i) to B_i = (i, N+M-i) and makes
// M - lambda_i north steps. Rotating the B-nest by a half turn gives the
// C-nest of the complementary partition lambda^c = (M - lambda_N, ...,
// M - lambda_1), so a B-nest is stored as a tableau of shape lambda^c: the
// north steps of path i on line x_j are the occurrences of letter N-j+1 in
// row N+1-i of that tableau.

/// Nest of N paths encoding a semistandard tableau of shape lambda.
struct CNest {
  std::size_t n = 0;
  Partition shape;
  /// path_steps[i][j]: north steps of path i+1 on line x_{j+1}.
  std::vector<std::vector<int>> path_steps;

  /// l_j, the total number of north steps on line x_j.
  std::vector<int> line_steps() const;
  /// |zeta|_C = sum_j (j-1) l_j
  long volume() const;
  /// |xi|_C = |lambda| + |zeta|_C = sum_j j l_j
  long weighted_volume() const;

  friend bool operator==(const CNest&, const CNest&) = default;
};

CNest nest_from_tableau(const Tableau& t, std::size_t n);
Tableau tableau_from_nest(const CNest& nest);

/// Conjugated nest from (1, mu_i) to B_i.
struct BNest {
  std::size_t n = 0;
  int m = 0;
  Partition shape;  ///< lambda, not its complement
  /// path_steps[i][j]: north steps of path i+1 on line x_{j+1}; zero for j > i.
  std::vector<std::vector<int>> path_steps;

  std::vector<int> line_steps() const;
  /// |zeta|_B = sum_j (j-1)(M - l_j)
  long volume() const;

  friend bool operator==(const BNest&, const BNest&) = default;
};

/// `complement_tableau` has the shape of lambda's complement in the M^N box.
BNest bnest_from_tableau(const Tableau& complement_tableau, const Partition& lambda, std::size_t n, int m);
Tableau tableau_from_bnest(const BNest& nest);

/// Column-complement bijection between semistandard tableaux of shape lambda
/// and of shape lambda^c (complement in the m^n box), entries 1..n. Column c
/// of the result holds the letters missing from column m-1-c of t.
/// Letter multiplicities map as count'(e) = m - count(e). An involution.
Tableau complement_tableau(const Tableau& t, std::size_t n, int m);

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// N nonintersecting paths with deviation k: the C side uses letters
/// k+1..N only (no north steps on lines x_{N-k+1}..x_N), so lambda has at
/// most L = N-k nonzero parts.
struct Watermelon {
  std::size_t n = 0;
  int m = 0;
  std::size_t k = 0;
  Partition lambda;   ///< exactly n parts, each <= m, last k zero
  Tableau c_tableau;  ///< shape lambda, entries k+1..n
  Tableau b_tableau;  ///< shape lambda^c, entries 1..n

  CNest c_nest() const;
  BNest b_nest() const;
  /// |w| = |xi|_C + |zeta|_B; the minimal watermelon has volume 0.
  long volume() const;
  /// m_j for j = 1..N+M: east steps taken at height j-1 along the drawn paths.
  std::vector<int> horizontal_reading() const;
  /// Checks every structural invariant listed on the members.
  bool is_valid() const;

  friend bool operator==(const Watermelon&, const Watermelon&) = default;
};

// Drawn geometry: line x_j of the C side sits at column N-j, line x_j of the
// B side at column N-1+j, and path i steps east from column N-1 to N at
// height mu_i. Every path then makes N east steps and M north steps.

std::vector<LatticePoint> watermelon_starts(std::size_t n);                  ///< C_i
std::vector<LatticePoint> watermelon_deviation_starts(std::size_t n, std::size_t k);  ///< D_i = C_i + (k, 0)
std::vector<LatticePoint> watermelon_ends(std::size_t n, int m);             ///< B_i
/// Vertex sequences of the N drawn paths, top path first.
std::vector<std::vector<LatticePoint>> lattice_paths(const Watermelon& w);

/// Streams every watermelon with parameters (N, M, k) exactly once: lambda in
/// BoxPartitions(N-k, M) order, then C tableaux, then B tableaux, each in
/// row-major lexicographic order.
class WatermelonStream {
 public:
  WatermelonStream(std::size_t n, int m, std::size_t k);
  std::optional<Watermelon> next();

 private:
  bool load_next_shape();

  std::size_t n_;
  int m_;
  std::size_t k_;
  BoxPartitions shapes_;
  Partition lambda_;
  std::vector<Tableau> c_list_;
  std::vector<Tableau> b_list_;
  std::size_t ci_ = 0;
  std::size_t bi_ = 0;
  bool exhausted_ = false;
};

/// Sum of q^{|w|} over WatermelonStream(N, M, k).
LaurentPoly watermelon_genfunc(std::size_t n, int m, std::size_t k);

/// prod_{i<=N} prod_{j<=M} (1 - q^{L+i+j-1}) / (1 - q^{i+j-1})
LaurentPoly closed_genfunc(long n, long l, long m);

/// Number of watermelons with deviation: prod (L+i+j-1)/(i+j-1).
BigInt count_deviation(long n, long l, long m);

/// Binomial determinants for the same count.
/// form 1: det(binom(L+M+N-i, M+N-j)); form 2: det(binom(L+M+N+j-i-1, L+j-i)).
BigInt count_deviation_det(long n, long l, long m, int form);

/// Lowest exponent of the raw determinant forms, L N (N-1)/2 = n(L^N).
Exponent det_form_offset(long n, long l);

/// Determinant forms of W(N,L,M), normalized so the constant term is 1.
/// form 1: det(q^{(j-1)(L+j-i)} [L+M+N-i choose M+N-j]);
/// form 2: det(h_{L+j-i}(1, q, ..., q^{N+M-1})).
LaurentPoly genfunc_det_forms(long n, long l, long m, int form);

/// det(binom(lambda_i+N-i, N-j)), the number of C-nests of shape lambda.
BigInt gv_count(const Partition& lambda, std::size_t n);

}  // namespace melon
