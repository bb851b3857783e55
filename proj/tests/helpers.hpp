#pragma once

#include <initializer_list>
#include <utility>

#include "melon/laurent_poly.hpp"

namespace testing_helpers {

// poly({{0, 1}, {2, -1}}) == 1 - q^2
inline melon::LaurentPoly poly(std::initializer_list<std::pair<melon::Exponent, long>> terms) {
  melon::LaurentPoly p;
  for (const auto& [e, c] : terms) p += melon::LaurentPoly::monomial(c, e);
  return p;
}

// 1 + q + ... + q^{n-1} coefficients given as a list starting at q^0.
inline melon::LaurentPoly coeffs(std::initializer_list<long> cs) {
  melon::LaurentPoly p;
  melon::Exponent e = 0;
  for (long c : cs) p += melon::LaurentPoly::monomial(c, e++);
  return p;
}

inline melon::LaurentPoly q(melon::Exponent e = 1) { return melon::LaurentPoly::q_power(e); }

}  // namespace testing_helpers
