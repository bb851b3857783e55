#include "melon/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "melon/errors.hpp"
#include "melon/paths.hpp"
#include "melon/plane_partitions.hpp"
#include "melon/poly_matrix.hpp"
#include "melon/qcombinat.hpp"
#include "melon/tableau.hpp"

namespace melon {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

IdentityReport make_report(std::string name, Json params, LaurentPoly lhs, LaurentPoly rhs, const Stopwatch& sw) {
  IdentityReport r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed_ms = sw.elapsed_ms();
  return r;
}

// (1 - q^{e(M+N)}) / (1 - q^e) for x_k y_j = q^e.
LaurentPoly binet_cauchy_entry(Exponent e, long power) {
  return exact_div(LaurentPoly(1) - LaurentPoly::q_power(e * power), LaurentPoly(1) - LaurentPoly::q_power(e));
}

void require_point(const GeometricPoint& pt, std::size_t size, const char* which) {
  if (pt.size() != size) {
    throw PreconditionError(std::string(which) + " must have " + std::to_string(size) + " exponents");
  }
  if (!pt.has_distinct_exponents()) throw DegeneratePoint(std::string(which) + " repeats an exponent");
}

void require_nonzero_sums(const GeometricPoint& a, const GeometricPoint& b) {
  for (Exponent x : a.exponents) {
    for (Exponent y : b.exponents) {
      if (x + y == 0) throw DegeneratePoint("a_k + b_j = 0 makes a Binet-Cauchy denominator vanish");
    }
  }
}

// sum_{lambda in M^rows} S_lambda(a) S_lambda(b), lambda padded to each point's size.
LaurentPoly schur_pair_sum(std::size_t rows, int m, const GeometricPoint& a, const GeometricPoint& b) {
  LaurentPoly sum;
  BoxPartitions shapes(rows, m);
  while (auto lambda = shapes.next()) sum += schur_bialternant(*lambda, a) * schur_bialternant(*lambda, b);
  return sum;
}

LaurentPoly q_schur_sum(std::size_t n, int m) {
  return schur_pair_sum(n, m, GeometricPoint::arithmetic(n, 1), GeometricPoint::arithmetic(n, 0));
}

GeometricPoint random_point(std::size_t n, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  GeometricPoint pt;
  while (pt.size() < n) {
    const Exponent e = dist(rng);
    if (std::find(pt.exponents.begin(), pt.exponents.end(), e) == pt.exponents.end()) pt.exponents.push_back(e);
  }
  return pt;
}

}  // namespace

Json IdentityReport::to_json() const {
  Json j = to_json_deterministic();
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

Json IdentityReport::to_json_deterministic() const {
  Json j;
  j["name"] = name;
  j["params"] = params;
  j["lhs"] = poly_to_json(lhs);
  j["rhs"] = poly_to_json(rhs);
  j["equal"] = equal;
  return j;
}

IdentityReport verify_binet_cauchy(std::size_t n, int m, const GeometricPoint& a, const GeometricPoint& b) {
  Stopwatch sw;
  require_point(a, n, "point a");
  require_point(b, n, "point b");
  require_nonzero_sums(a, b);
  const LaurentPoly lhs = schur_pair_sum(n, m, a, b);
  const long power = m + static_cast<long>(n);
  const PolyMatrix entries = PolyMatrix::generate(n, n, [&](std::size_t k, std::size_t j) {
    return binet_cauchy_entry(a.exponents[k] + b.exponents[j], power);
  });
  const LaurentPoly rhs = exact_div(det_fraction_free(entries),
                                    alternant_vandermonde(a.exponents) * alternant_vandermonde(b.exponents));
  return make_report("binet_cauchy", Json{{"N", n}, {"M", m}, {"a", a.exponents}, {"b", b.exponents}}, lhs, rhs, sw);
}

IdentityReport verify_q_binet_cauchy(std::size_t n, int m) {
  if (n < 1) throw PreconditionError("verify_q_binet_cauchy: N >= 1");
  IdentityReport r = verify_binet_cauchy(n, m, GeometricPoint::arithmetic(n, 0), GeometricPoint::arithmetic(n, 1));
  r.name = "q_binet_cauchy";
  r.params = Json{{"N", n}, {"M", m}};
  return r;
}

IdentityReport verify_kuperberg(std::size_t n, int m) {
  if (n < 1) throw PreconditionError("verify_kuperberg: N >= 1");
  Stopwatch sw;
  const long power = m + static_cast<long>(n);
  const PolyMatrix entries = PolyMatrix::generate(n, n, [&](std::size_t j, std::size_t k) {
    return binet_cauchy_entry(static_cast<Exponent>(j + k + 1), power);
  });
  const auto x = GeometricPoint::arithmetic(n, 0);
  const auto y = GeometricPoint::arithmetic(n, 1);
  const LaurentPoly lhs = exact_div(det_fraction_free(entries),
                                    alternant_vandermonde(x.exponents) * alternant_vandermonde(y.exponents));
  return make_report("kuperberg", Json{{"N", n}, {"M", m}}, lhs,
                     macmahon_square(static_cast<long>(n), m), sw);
}

IdentityReport verify_qbinomial_det(std::size_t n, int m) {
  if (n < 1 || m < 1) throw PreconditionError("verify_qbinomial_det: N >= 1 and M >= 1");
  Stopwatch sw;
  const LaurentPoly lhs = q_schur_sum(n, m);
  const auto nn = static_cast<long>(n);
  const auto size = static_cast<std::size_t>(m);
  const LaurentPoly det = det_fraction_free(PolyMatrix::generate(size, size, [&](std::size_t i, std::size_t j) {
    return qbinomial(2 * nn + static_cast<long>(i), nn + static_cast<long>(j));
  }));
  const Exponent stated = nn * m * (1 - m) / 2;
  Exponent used = stated;
  if (det.shifted(stated) != lhs && det.shifted(-stated) == lhs) used = -stated;
  Json params{{"N", n}, {"M", m}, {"prefactor_exponent", used}, {"stated_prefactor_holds", used == stated}};
  return make_report("qbinomial_det", std::move(params), lhs, det.shifted(used), sw);
}

IdentityReport verify_deviation_binet_cauchy(std::size_t n, int m, std::size_t k, const GeometricPoint& a,
                                             const GeometricPoint& b) {
  if (k > n) throw PreconditionError("deviation k exceeds N");
  Stopwatch sw;
  const std::size_t l = n - k;
  require_point(a, l, "point a");
  require_point(b, n, "point b");
  require_nonzero_sums(a, b);

  const LaurentPoly lhs = schur_pair_sum(l, m, a, b);
  const long power = m + static_cast<long>(n);
  const PolyMatrix entries = PolyMatrix::generate(n, n, [&](std::size_t r, std::size_t j) {
    if (r < l) return binet_cauchy_entry(a.exponents[r] + b.exponents[j], power);
    return LaurentPoly::q_power(b.exponents[j] * static_cast<Exponent>(n - 1 - r));
  });
  const Exponent a_sum = std::accumulate(a.exponents.begin(), a.exponents.end(), Exponent{0});
  const LaurentPoly rhs = exact_div(det_fraction_free(entries).shifted(-static_cast<Exponent>(k) * a_sum),
                                    alternant_vandermonde(a.exponents) * alternant_vandermonde(b.exponents));
  return make_report("deviation_binet_cauchy",
                     Json{{"N", n}, {"M", m}, {"k", k}, {"a", a.exponents}, {"b", b.exponents}}, lhs, rhs, sw);
}

std::vector<IdentityReport> verify_watermelon_suite(std::size_t n, int m, std::size_t k) {
  if (k > n) throw PreconditionError("deviation k exceeds N");
  const std::size_t l = n - k;
  const Json params{{"N", n}, {"M", m}, {"k", k}, {"L", l}};
  std::vector<IdentityReport> out;

  Stopwatch enum_sw;
  std::vector<LaurentPoly::Term> volume_terms;
  std::vector<LaurentPoly::Term> offset_terms;
  std::optional<long> first_offset;
  WatermelonStream stream(n, m, k);
  while (auto w = stream.next()) {
    const long volume = w->volume();
    const auto reading = w->horizontal_reading();
    long height_sum = 0;
    for (std::size_t j = 0; j < reading.size(); ++j) height_sum += static_cast<long>(j) * reading[j];
    const long offset = height_sum - volume;
    if (!first_offset) first_offset = offset;
    volume_terms.push_back({volume, 1});
    offset_terms.push_back({offset, 1});
  }
  const LaurentPoly enumerated = LaurentPoly::from_terms(std::move(volume_terms));
  const LaurentPoly offsets = LaurentPoly::from_terms(std::move(offset_terms));
  const double enum_ms = enum_sw.elapsed_ms();

  {
    Stopwatch sw;
    const LaurentPoly sum = schur_pair_sum(l, m, GeometricPoint::arithmetic(l, 1), GeometricPoint::arithmetic(n, 0));
    out.push_back(make_report("watermelon.enumeration_vs_schur_sum", params, enumerated, sum, sw));
    out.back().elapsed_ms += enum_ms;
  }
  const auto nn = static_cast<long>(n);
  const auto ll = static_cast<long>(l);
  Stopwatch product_sw;
  const LaurentPoly product = closed_genfunc(nn, ll, m);
  out.push_back(make_report("watermelon.enumeration_vs_product", params, enumerated, product, product_sw));
  for (int form : {1, 2}) {
    Stopwatch sw;
    Json p = params;
    p["normalization_exponent"] = -det_form_offset(nn, ll);
    out.push_back(make_report("watermelon.product_vs_det_form" + std::to_string(form), std::move(p), product,
                              genfunc_det_forms(nn, ll, m, form), sw));
  }
  {
    Stopwatch sw;
    const Partition rectangle(std::vector<int>(n, static_cast<int>(l)));
    const LaurentPoly specialized = schur_bialternant(rectangle, GeometricPoint::arithmetic(n + static_cast<std::size_t>(m), 0));
    const Exponent offset = specialized.min_exp() - enumerated.min_exp();
    Json p = params;
    p["specialization_offset"] = offset;
    p["offset_is_n_of_rectangle"] = offset == det_form_offset(nn, ll);
    out.push_back(make_report("watermelon.schur_specialization", std::move(p), enumerated, specialized.shifted(-offset), sw));
  }
  {
    Stopwatch sw;
    const BigInt count = eval_at_one(enumerated);
    Json p = params;
    p["horizontal_offset"] = first_offset.value_or(0);
    out.push_back(make_report("watermelon.horizontal_reading_offset", std::move(p), offsets,
                              LaurentPoly::monomial(count, first_offset.value_or(0)), sw));
    out.back().elapsed_ms += enum_ms;
  }
  return out;
}

IdentityReport verify_gessel_viennot(const Partition& lambda, std::size_t n) {
  if (n < 1) throw PreconditionError("verify_gessel_viennot: N >= 1");
  Stopwatch sw;
  const BigInt det = gv_count(lambda, n);
  long nests = 0;
  std::set<std::vector<std::vector<int>>> distinct;
  for_each_ssyt(lambda, 1, static_cast<int>(n), [&](const Tableau& t) {
    const CNest nest = nest_from_tableau(t, n);
    if (!(tableau_from_nest(nest) == t)) throw InternalError("C-nest does not round-trip to its tableau");
    distinct.insert(nest.path_steps);
    ++nests;
    return true;
  });
  if (distinct.size() != static_cast<std::size_t>(nests)) throw InternalError("two tableaux map to one C-nest");
  const BigInt at_one = eval_at_one(schur_bialternant(lambda, GeometricPoint::arithmetic(n, 0)));
  const LaurentPoly lhs = LaurentPoly(det) + LaurentPoly::monomial(det, 1);
  const LaurentPoly rhs = LaurentPoly(BigInt(nests)) + LaurentPoly::monomial(at_one, 1);
  Json params{{"lambda", lambda.parts()}, {"N", n}};
  return make_report("gessel_viennot", std::move(params), lhs, rhs, sw);
}

IdentityReport verify_zq_equals_w(std::size_t n, std::size_t l, int m) {
  if (l > n) throw PreconditionError("verify_zq_equals_w: need L <= N");
  Stopwatch sw;
  return make_report("zq_equals_w", Json{{"N", n}, {"L", l}, {"M", m}}, zq(n, l, m), watermelon_genfunc(n, m, n - l),
                     sw);
}

std::vector<IdentityReport> verify_schur_routes(const Partition& lambda, long m) {
  const GeometricPoint pt = GeometricPoint::arithmetic(static_cast<std::size_t>(m), 0);
  Stopwatch base_sw;
  const LaurentPoly reference = schur_bialternant(lambda, pt);
  const double base_ms = base_sw.elapsed_ms();
  const Json params{{"lambda", lambda.parts()}, {"m", m}};
  std::vector<IdentityReport> out;
  auto route = [&](const char* name, auto&& compute) {
    Stopwatch sw;
    out.push_back(make_report(name, params, reference, compute(), sw));
    out.back().elapsed_ms += base_ms;
  };
  route("schur.tableau_sum", [&] { return schur_tableau_sum(lambda, pt); });
  route("schur.principal_product", [&] { return schur_principal_product(lambda, m); });
  route("schur.h_determinant", [&] { return schur_h_determinant(lambda, m); });
  route("schur.gv_determinant", [&] { return schur_gv_determinant(lambda, m); });
  return out;
}

std::vector<std::pair<GeometricPoint, GeometricPoint>> golden_binet_cauchy_points(std::size_t n) {
  using P = GeometricPoint;
  switch (n) {
    case 1:
      return {{P{{1}}, P{{1}}}, {P{{-2}}, P{{5}}}};
    case 2:
      return {{P{{0, 3}}, P{{1, 5}}}, {P{{-1, 2}}, P{{4, -3}}}};
    case 3:
      return {{P{{0, 3, 7}}, P{{1, 5, 2}}}, {P{{-2, 1, 4}}, P{{3, -3, 6}}}};
    default: {
      P a, b;
      for (std::size_t j = 0; j < n; ++j) {
        a.exponents.push_back(2 * static_cast<Exponent>(j));
        b.exponents.push_back(3 * static_cast<Exponent>(j) + 1);
      }
      return {{a, b}};
    }
  }
}

std::pair<GeometricPoint, GeometricPoint> random_binet_cauchy_points(std::size_t n, std::uint64_t seed, int range) {
  if (2 * static_cast<std::size_t>(range) + 1 < n) throw PreconditionError("exponent range too small for N");
  std::mt19937_64 rng(seed);
  for (;;) {
    GeometricPoint a = random_point(n, rng, range);
    GeometricPoint b = random_point(n, rng, range);
    bool ok = true;
    for (Exponent x : a.exponents) {
      for (Exponent y : b.exponents) ok = ok && x + y != 0;
    }
    if (ok) return {std::move(a), std::move(b)};
  }
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("MELON_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<IdentityReport> run_tasks(const std::vector<VerifyTask>& tasks, unsigned workers) {
  if (workers == 0) workers = default_worker_count();
  std::vector<std::vector<IdentityReport>> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < tasks.size(); i = cursor++) {
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        IdentityReport failed;
        failed.name = tasks[i].label;
        failed.params = Json{{"error", e.what()}};
        failed.equal = false;
        results[i] = {std::move(failed)};
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<IdentityReport> flat;
  for (auto& batch : results) {
    for (auto& r : batch) flat.push_back(std::move(r));
  }
  return flat;
}

}  // namespace melon
