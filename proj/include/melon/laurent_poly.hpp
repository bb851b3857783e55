#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace melon {

using BigInt = mpz_class;
using Exponent = std::int64_t;

/// A polynomial in one variable q with integer coefficients and possibly
/// negative exponents.
///
/// Terms are kept sorted by strictly increasing exponent and no stored
/// coefficient is zero, so two values are equal exactly when their term
/// lists are equal. Values are immutable once built; every operation
/// returns a fresh polynomial.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    BigInt coef;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& constant);

  /// coef * q^exp
  static LaurentPoly monomial(const BigInt& coef, Exponent exp);
  static LaurentPoly q_power(Exponent exp) { return monomial(1, exp); }
  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Lowest / highest exponent present. Both require a nonzero value.
  Exponent min_exp() const;
  Exponent max_exp() const;

  BigInt coeff(Exponent exp) const;

  /// Multiplies by q^k.
  LaurentPoly shifted(Exponent k) const;

  /// Coefficient list reads the same forwards and backwards.
  bool is_palindromic() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "q^-1 + 2 - 3*q^2". Zero prints as "0".
  std::string to_string() const;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Returns c with a == b * c. Throws NotDivisible when b does not divide a
/// (or b is zero).
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Value at q = 1, i.e. the sum of all coefficients.
BigInt eval_at_one(const LaurentPoly& p);

/// Ordinary binomial coefficient; 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace melon
