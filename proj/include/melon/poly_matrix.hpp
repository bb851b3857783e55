#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "melon/errors.hpp"
#include "melon/laurent_poly.hpp"

namespace melon {

/// Dense row-major matrix over a commutative ring element type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  template <typename F>
  static Matrix generate(std::size_t rows, std::size_t cols, F&& entry) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(r, c);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using IntMatrix = Matrix<BigInt>;

namespace detail {

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero(const BigInt& z) { return z == 0; }

inline LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  try {
    return exact_div(a, b);
  } catch (const NotDivisible& e) {
    throw InternalError(std::string("fraction-free elimination: inexact division: ") + e.what());
  }
}

inline BigInt divide_exact(const BigInt& a, const BigInt& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw InternalError("fraction-free elimination: inexact integer division");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

/// One-step fraction-free (Bareiss) elimination. Pivot: first nonzero entry
/// at or below the diagonal in the current column; a zero column ends with 0.
template <typename T>
T fraction_free_det(Matrix<T> m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return T(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));

  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(m(pivot, k))) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(cross, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

}  // namespace detail

/// Exact determinant; the 0x0 determinant is 1.
LaurentPoly det_fraction_free(const PolyMatrix& m);
BigInt det_fraction_free(const IntMatrix& m);

/// prod_{m<l} (q^{a_l} - q^{a_m}); zero when two exponents coincide.
LaurentPoly vandermonde(std::span<const Exponent> exponents);

/// det(q^{a_j (N-k)})_{j,k}, the alternant of the empty partition. Equal to
/// (-1)^{N(N-1)/2} * vandermonde(a); this is the normalization under which
/// a Schur function is a ratio of two alternants.
LaurentPoly alternant_vandermonde(std::span<const Exponent> exponents);

}  // namespace melon
