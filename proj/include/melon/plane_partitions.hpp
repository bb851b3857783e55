#pragma once

#include <optional>
#include <vector>

#include "melon/laurent_poly.hpp"
#include "melon/paths.hpp"

namespace melon {

/// Array pi_{ij} of stack heights on an L x N grid (i <= L rows, j <= N
/// columns), nonincreasing along rows and down columns. Box B(N, L, M)
/// additionally bounds every part by M.
class PlanePartition {
 public:
  PlanePartition() = default;
  /// Throws PreconditionError unless the array is monotone and nonnegative.
  PlanePartition(std::size_t rows, std::size_t cols, std::vector<int> parts);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int operator()(std::size_t i, std::size_t j) const { return parts_[i * cols_ + j]; }
  const std::vector<int>& parts() const { return parts_; }

  long volume() const;
  int max_part() const;
  /// Fits B(N, L, M): N columns, L rows, heights <= M.
  bool fits_box(std::size_t n, std::size_t l, int m) const;
  PlanePartition transposed() const;

  friend bool operator==(const PlanePartition&, const PlanePartition&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> parts_;
};

/// Plane partitions of B(N, L, M) in increasing lexicographic order of the
/// row-major part vector, starting from the empty one.
class BoxPlanePartitions {
 public:
  BoxPlanePartitions(std::size_t n, std::size_t l, int m);
  std::optional<PlanePartition> next();

 private:
  std::size_t n_;
  std::size_t l_;
  int m_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Z_q(N, L, M) by enumeration.
LaurentPoly zq(std::size_t n, std::size_t l, int m);

/// prod_{i<=N} prod_{j<=M} (1 - q^{L+i+j-1}) / (1 - q^{i+j-1})
LaurentPoly macmahon_product(long n, long l, long m);

/// The symmetric-box MacMahon form prod_{j,k<=N} (1 - q^{M+j+k-1}) / (1 - q^{j+k-1}).
LaurentPoly macmahon_square(long n, long m);

/// Volume-preserving bijection B(N, L, M) -> watermelons with deviation
/// k = N - L.
///
/// The diagonal slices nu^(t) = (pi_{i,i+t})_i of pi interlace. The main
/// diagonal is lambda; the slices t = N-1..1 form a tableau P of shape lambda
/// with letters 1..N (letter s fills nu^(N-s) / nu^(N-s+1)), the slices
/// t = -(L-1)..-1 a tableau Q with letters 1..L. The watermelon takes
/// C tableau = Q + k and B tableau = complement_tableau(P). Then
/// |pi| = |lambda| + sum_Q (L - e) + sum_P (N - e) = |xi|_C + |zeta|_B.
/// Throws BoxMismatch when pi is not in the box or L > N.
Watermelon gradient_bijection(const PlanePartition& pi, std::size_t n, std::size_t l, int m);

PlanePartition gradient_bijection_inverse(const Watermelon& w);

}  // namespace melon
