#pragma once

#include <vector>

#include "melon/laurent_poly.hpp"
#include "melon/partitions.hpp"

namespace melon {

/// The point x_j = q^{a_j}, j = 1..m.
struct GeometricPoint {
  std::vector<Exponent> exponents;

  std::size_t size() const { return exponents.size(); }
  bool has_distinct_exponents() const;

  /// (offset, offset+1, ..., offset+m-1)
  static GeometricPoint arithmetic(std::size_t m, Exponent offset = 0);
};

/// Ratio of alternants det(x_j^{lambda_k+N-k}) / det(x_j^{N-k}), N = pt.size().
/// Throws DegeneratePoint on repeated exponents and PreconditionError when
/// lambda has more than N nonzero parts.
LaurentPoly schur_bialternant(const Partition& lambda, const GeometricPoint& pt);

/// Sum of x^T over semistandard tableaux with entries 1..m. Brute force.
LaurentPoly schur_tableau_sum(const Partition& lambda, const GeometricPoint& pt);

/// Principal specialization S_lambda(1, q, ..., q^{m-1}) through the hook-type
/// product q^{n(lambda)} prod_{i<j<=m} (1 - q^{lambda_i-lambda_j+j-i}) / (1 - q^{j-i}).
LaurentPoly schur_principal_product(const Partition& lambda, long m);

/// det(h_{lambda_i-i+j}(1, ..., q^{m-1})), N x N with N = length(lambda).
LaurentPoly schur_h_determinant(const Partition& lambda, long m);

/// det(q^{(j-1)(lambda_i+j-i)} [lambda_i+m-i choose m-j]), N x N.
LaurentPoly schur_gv_determinant(const Partition& lambda, long m);

/// S_lambda(q, ..., q^N) == q^{|lambda|} S_lambda(1, ..., q^{N-1}).
bool weight_shift_check(const Partition& lambda, std::size_t n);

/// Drops the last k of N parts; they must all be zero (NonzeroTail otherwise).
Partition limit_vanishing_vars(const Partition& lambda, std::size_t n, std::size_t k);

}  // namespace melon
