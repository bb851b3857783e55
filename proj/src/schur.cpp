#include "melon/schur.hpp"

#include <algorithm>
#include <set>

#include "melon/errors.hpp"
#include "melon/poly_matrix.hpp"
#include "melon/qcombinat.hpp"
#include "melon/tableau.hpp"

namespace melon {

bool GeometricPoint::has_distinct_exponents() const {
  return std::set<Exponent>(exponents.begin(), exponents.end()).size() == exponents.size();
}

GeometricPoint GeometricPoint::arithmetic(std::size_t m, Exponent offset) {
  GeometricPoint pt;
  for (std::size_t j = 0; j < m; ++j) pt.exponents.push_back(offset + static_cast<Exponent>(j));
  return pt;
}

namespace {

void require_vars(const Partition& lambda, long m, const char* who) {
  if (m < 1) throw PreconditionError(std::string(who) + ": need at least one variable");
  if (lambda.length() > static_cast<std::size_t>(m)) {
    throw PreconditionError(std::string(who) + ": partition " + lambda.to_string() +
                            " has more rows than variables");
  }
}

PolyMatrix alternant(const Partition& padded, const GeometricPoint& pt) {
  const std::size_t n = pt.size();
  return PolyMatrix::generate(n, n, [&](std::size_t j, std::size_t k) {
    const Exponent power = padded[k] + static_cast<Exponent>(n - 1 - k);
    return LaurentPoly::q_power(pt.exponents[j] * power);
  });
}

}  // namespace

LaurentPoly schur_bialternant(const Partition& lambda, const GeometricPoint& pt) {
  if (!pt.has_distinct_exponents()) throw DegeneratePoint("bialternant: exponents of the point repeat");
  const Partition padded = lambda.padded(pt.size());
  const LaurentPoly numerator = det_fraction_free(alternant(padded, pt));
  const LaurentPoly denominator = det_fraction_free(alternant(Partition(), pt));
  return exact_div(numerator, denominator);
}

LaurentPoly schur_tableau_sum(const Partition& lambda, const GeometricPoint& pt) {
  require_vars(lambda, static_cast<long>(pt.size()), "tableau_sum");
  std::vector<LaurentPoly::Term> terms;
  for_each_ssyt(lambda, 1, static_cast<int>(pt.size()), [&](const Tableau& t) {
    Exponent e = 0;
    for (const auto& row : t.rows) {
      for (int v : row) e += pt.exponents[static_cast<std::size_t>(v - 1)];
    }
    terms.push_back({e, 1});
    return true;
  });
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly schur_principal_product(const Partition& lambda, long m) {
  require_vars(lambda, m, "principal_product");
  const Partition padded = lambda.padded(static_cast<std::size_t>(m));
  LaurentPoly numerator(1);
  LaurentPoly denominator(1);
  for (long i = 0; i < m; ++i) {
    for (long j = i + 1; j < m; ++j) {
      const long top = padded[static_cast<std::size_t>(i)] - padded[static_cast<std::size_t>(j)] + j - i;
      numerator *= LaurentPoly(1) - LaurentPoly::q_power(top);
      denominator *= LaurentPoly(1) - LaurentPoly::q_power(j - i);
    }
  }
  return exact_div(numerator, denominator).shifted(padded.n_value());
}

LaurentPoly schur_h_determinant(const Partition& lambda, long m) {
  require_vars(lambda, m, "h_determinant");
  const Partition padded = lambda.trimmed();
  const std::size_t n = padded.size();
  return det_fraction_free(PolyMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    const long degree = padded[i] - static_cast<long>(i) + static_cast<long>(j);
    return h_complete(degree, m);
  }));
}

LaurentPoly schur_gv_determinant(const Partition& lambda, long m) {
  require_vars(lambda, m, "gv_determinant");
  const Partition padded = lambda.trimmed();
  const std::size_t n = padded.size();
  return det_fraction_free(PolyMatrix::generate(n, n, [&](std::size_t i0, std::size_t j0) {
    const long i = static_cast<long>(i0) + 1;
    const long j = static_cast<long>(j0) + 1;
    const long part = padded[i0];
    return qbinomial(part + m - i, m - j).shifted((j - 1) * (part + j - i));
  }));
}

bool weight_shift_check(const Partition& lambda, std::size_t n) {
  const LaurentPoly shifted_point = schur_bialternant(lambda, GeometricPoint::arithmetic(n, 1));
  const LaurentPoly base_point = schur_bialternant(lambda, GeometricPoint::arithmetic(n, 0));
  return shifted_point == base_point.shifted(lambda.weight());
}

Partition limit_vanishing_vars(const Partition& lambda, std::size_t n, std::size_t k) {
  if (k > n) throw PreconditionError("limit_vanishing_vars: k exceeds N");
  const Partition padded = lambda.padded(n);
  for (std::size_t i = n - k; i < n; ++i) {
    if (padded[i] != 0) {
      throw NonzeroTail("limit_vanishing_vars: part " + std::to_string(i + 1) + " of " +
                        lambda.to_string() + " is nonzero");
    }
  }
  std::vector<int> head(padded.parts().begin(), padded.parts().begin() + static_cast<long>(n - k));
  return Partition(std::move(head));
}

}  // namespace melon
