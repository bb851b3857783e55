#include "melon/poly_matrix.hpp"

namespace melon {

LaurentPoly det_fraction_free(const PolyMatrix& m) { return detail::fraction_free_det(m); }

BigInt det_fraction_free(const IntMatrix& m) { return detail::fraction_free_det(m); }

LaurentPoly vandermonde(std::span<const Exponent> exponents) {
  LaurentPoly out(1);
  for (std::size_t l = 0; l < exponents.size(); ++l) {
    for (std::size_t m = 0; m < l; ++m) {
      if (exponents[l] == exponents[m]) return {};
      out *= LaurentPoly::q_power(exponents[l]) - LaurentPoly::q_power(exponents[m]);
    }
  }
  return out;
}

LaurentPoly alternant_vandermonde(std::span<const Exponent> exponents) {
  const std::size_t n = exponents.size();
  LaurentPoly v = vandermonde(exponents);
  return (n * (n - 1) / 2) % 2 == 0 ? v : -v;
}

}  // namespace melon
