#include "melon/laurent_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "melon/errors.hpp"

namespace melon {

namespace {

// Dense scratch buffers are used when the exponent span is not much larger
// than the number of products; beyond this the sparse merge path is cheaper.
constexpr std::size_t kDenseSlack = 4;

using Terms = std::vector<LaurentPoly::Term>;

Terms merge_sorted(const Terms& a, const Terms& b, bool subtract) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, subtract ? BigInt(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      BigInt c = subtract ? BigInt(a[i].coef - b[j].coef) : BigInt(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms from_dense(Exponent base, std::vector<BigInt>& dense) {
  Terms out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.push_back({base + static_cast<Exponent>(i), std::move(dense[i])});
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({0, BigInt(constant)});
}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(const BigInt& coef, Exponent exp) {
  if (coef == 0) return {};
  return LaurentPoly(Terms{{exp, coef}});
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.exp < y.exp; });
  Terms out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return LaurentPoly(std::move(out));
}

Exponent LaurentPoly::min_exp() const {
  if (terms_.empty()) throw PreconditionError("min_exp of the zero polynomial");
  return terms_.front().exp;
}

Exponent LaurentPoly::max_exp() const {
  if (terms_.empty()) throw PreconditionError("max_exp of the zero polynomial");
  return terms_.back().exp;
}

BigInt LaurentPoly::coeff(Exponent exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, Exponent e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coef;
  return 0;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  Terms out = terms_;
  for (auto& t : out) t.exp += k;
  return LaurentPoly(std::move(out));
}

bool LaurentPoly::is_palindromic() const {
  if (terms_.empty()) return true;
  const Exponent sum = min_exp() + max_exp();
  for (const auto& t : terms_) {
    if (coeff(sum - t.exp) != t.coef) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  Terms out = terms_;
  for (auto& t : out) t.coef = -t.coef;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(merge_sorted(a.terms_, b.terms_, false));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(merge_sorted(a.terms_, b.terms_, true));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Exponent lo = a.min_exp() + b.min_exp();
  const auto span = static_cast<std::size_t>(a.max_exp() + b.max_exp() - lo + 1);
  const std::size_t products = a.term_count() * b.term_count();
  if (span <= kDenseSlack * products + 64) {
    std::vector<BigInt> dense(span);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        mpz_addmul(dense[static_cast<std::size_t>(x.exp + y.exp - lo)].get_mpz_t(),
                   x.coef.get_mpz_t(), y.coef.get_mpz_t());
      }
    }
    return LaurentPoly(from_dense(lo, dense));
  }
  Terms raw;
  raw.reserve(products);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) raw.push_back({x.exp + y.exp, x.coef * y.coef});
  }
  return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return *this = *this + other; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this = *this - other; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    BigInt mag = abs(t.coef);
    if (first) {
      if (t.coef < 0) os << '-';
    } else {
      os << (t.coef < 0 ? " - " : " + ");
    }
    first = false;
    if (t.exp == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (t.exp != 1) os << '^' << t.exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  const Exponent b_lo = b.min_exp();
  const Exponent b_hi = b.max_exp();
  const Exponent a_lo = a.min_exp();
  const Exponent a_hi = a.max_exp();
  const Exponent q_lo = a_lo - b_lo;
  const Exponent q_hi = a_hi - b_hi;
  if (q_hi < q_lo) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());

  // Long division from the top over a dense copy of the dividend.
  std::vector<BigInt> rem(static_cast<std::size_t>(a_hi - a_lo + 1));
  for (const auto& t : a.terms()) rem[static_cast<std::size_t>(t.exp - a_lo)] = t.coef;
  const BigInt& lead = b.terms().back().coef;
  std::vector<BigInt> quot(static_cast<std::size_t>(q_hi - q_lo + 1));
  BigInt c;
  for (Exponent e = q_hi; e >= q_lo; --e) {
    BigInt& top = rem[static_cast<std::size_t>(e + b_hi - a_lo)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
    }
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (const auto& t : b.terms()) {
      auto& slot = rem[static_cast<std::size_t>(e + t.exp - a_lo)];
      mpz_submul(slot.get_mpz_t(), c.get_mpz_t(), t.coef.get_mpz_t());
    }
    quot[static_cast<std::size_t>(e - q_lo)] = c;
  }
  for (const auto& r : rem) {
    if (r != 0) throw NotDivisible(a.to_string() + " is not divisible by " + b.to_string());
  }
  return LaurentPoly::from_terms(from_dense(q_lo, quot));
}

BigInt eval_at_one(const LaurentPoly& p) {
  BigInt sum = 0;
  for (const auto& t : p.terms()) sum += t.coef;
  return sum;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace melon
