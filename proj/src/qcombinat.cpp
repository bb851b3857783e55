#include "melon/qcombinat.hpp"

#include <algorithm>

#include "melon/errors.hpp"

namespace melon {

LaurentPoly qint(long n) {
  if (n < 0) throw PreconditionError("qint: negative argument");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (long e = 0; e < n; ++e) terms.push_back({e, 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfactorial(long n) {
  if (n < 0) throw PreconditionError("qfactorial: negative argument");
  LaurentPoly out(1);
  for (long i = 2; i <= n; ++i) out *= qint(i);
  return out;
}

LaurentPoly qbinomial(long upper, long lower) {
  if (upper < 0) throw PreconditionError("qbinomial: negative upper index");
  if (lower < 0 || lower > upper) return {};
  const long r = std::min(lower, upper - lower);
  // Running product: after step i the value is [R-r+i choose i], so each
  // division is exact.
  LaurentPoly out(1);
  for (long i = 1; i <= r; ++i) out = exact_div(out * qint(upper - r + i), qint(i));
  return out;
}

bool pascal_check(long upper, long lower) {
  if (upper < 1) throw PreconditionError("pascal_check: upper index must be >= 1");
  const LaurentPoly rhs = qbinomial(upper - 1, lower - 1) +
                          (lower >= 0 ? qbinomial(upper - 1, lower).shifted(lower) : LaurentPoly());
  return qbinomial(upper, lower) == rhs;
}

LaurentPoly h_complete(long degree, long vars) {
  if (vars < 1) throw PreconditionError("h_complete: need at least one variable");
  if (degree < 0) return {};
  return qbinomial(vars + degree - 1, degree);
}

}  // namespace melon
