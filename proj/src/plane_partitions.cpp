#include "melon/plane_partitions.hpp"

#include <algorithm>
#include <numeric>

#include "melon/errors.hpp"

namespace melon {

PlanePartition::PlanePartition(std::size_t rows, std::size_t cols, std::vector<int> parts)
    : rows_(rows), cols_(cols), parts_(std::move(parts)) {
  if (parts_.size() != rows_ * cols_) throw PreconditionError("plane partition: part count does not match the grid");
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const int v = (*this)(i, j);
      if (v < 0 || (i > 0 && v > (*this)(i - 1, j)) || (j > 0 && v > (*this)(i, j - 1))) {
        throw PreconditionError("plane partition parts must be nonnegative and nonincreasing");
      }
    }
  }
}

long PlanePartition::volume() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

int PlanePartition::max_part() const { return parts_.empty() ? 0 : parts_.front(); }

bool PlanePartition::fits_box(std::size_t n, std::size_t l, int m) const {
  // Rows or columns beyond the box are allowed only if they are empty.
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const int v = (*this)(i, j);
      if (v > m) return false;
      if (v > 0 && (i >= l || j >= n)) return false;
    }
  }
  return true;
}

PlanePartition PlanePartition::transposed() const {
  std::vector<int> out(parts_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = (*this)(i, j);
  }
  return PlanePartition(cols_, rows_, std::move(out));
}

BoxPlanePartitions::BoxPlanePartitions(std::size_t n, std::size_t l, int m)
    : n_(n), l_(l), m_(m), current_(n * l, 0) {
  if (m < 0) throw PreconditionError("box height must be nonnegative");
}

std::optional<PlanePartition> BoxPlanePartitions::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return PlanePartition(l_, n_, current_);
  }
  for (std::size_t p = current_.size(); p-- > 0;) {
    const std::size_t i = p / n_;
    const std::size_t j = p % n_;
    int cap = m_;
    if (j > 0) cap = std::min(cap, current_[p - 1]);
    if (i > 0) cap = std::min(cap, current_[p - n_]);
    if (current_[p] < cap) {
      ++current_[p];
      std::fill(current_.begin() + static_cast<long>(p) + 1, current_.end(), 0);
      return PlanePartition(l_, n_, current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

LaurentPoly zq(std::size_t n, std::size_t l, int m) {
  std::vector<LaurentPoly::Term> terms;
  BoxPlanePartitions stream(n, l, m);
  while (auto pi = stream.next()) terms.push_back({pi->volume(), 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly macmahon_product(long n, long l, long m) {
  if (n < 0 || l < 0 || m < 0) throw PreconditionError("macmahon_product: negative box size");
  LaurentPoly numerator(1);
  LaurentPoly denominator(1);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= m; ++j) {
      numerator *= LaurentPoly(1) - LaurentPoly::q_power(l + i + j - 1);
      denominator *= LaurentPoly(1) - LaurentPoly::q_power(i + j - 1);
    }
  }
  return exact_div(numerator, denominator);
}

LaurentPoly macmahon_square(long n, long m) {
  if (n < 0 || m < 0) throw PreconditionError("macmahon_square: negative box size");
  LaurentPoly numerator(1);
  LaurentPoly denominator(1);
  for (long k = 1; k <= n; ++k) {
    for (long j = 1; j <= n; ++j) {
      numerator *= LaurentPoly(1) - LaurentPoly::q_power(m + j + k - 1);
      denominator *= LaurentPoly(1) - LaurentPoly::q_power(j + k - 1);
    }
  }
  return exact_div(numerator, denominator);
}

namespace {

int count_at_most(const Tableau& t, std::size_t row, int bound) {
  if (row >= t.rows.size()) return 0;
  const auto& r = t.rows[row];
  return static_cast<int>(std::count_if(r.begin(), r.end(), [&](int v) { return v <= bound; }));
}

// Tableau whose letter s fills slice(levels - s) minus slice(levels - s + 1),
// with slice(levels) empty.
template <typename Slice>
Tableau tableau_from_slices(std::size_t rows, int levels, Slice&& slice) {
  Tableau t;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<int> row;
    int previous = 0;
    for (int s = 1; s <= levels; ++s) {
      const int current = slice(levels - s, i);
      row.insert(row.end(), static_cast<std::size_t>(current - previous), s);
      previous = current;
    }
    t.rows.push_back(std::move(row));
  }
  while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
  return t;
}

}  // namespace

Watermelon gradient_bijection(const PlanePartition& pi, std::size_t n, std::size_t l, int m) {
  if (l > n) throw BoxMismatch("gradient_bijection: need L <= N (deviation k = N - L >= 0)");
  if (pi.rows() != l || pi.cols() != n || !pi.fits_box(n, l, m)) {
    throw BoxMismatch("gradient_bijection: plane partition does not fit B(" + std::to_string(n) + "," +
                      std::to_string(l) + "," + std::to_string(m) + ")");
  }
  const std::size_t k = n - l;
  std::vector<int> diagonal(n, 0);
  for (std::size_t i = 0; i < l; ++i) diagonal[i] = pi(i, i);

  // Slices above the diagonal, t = j - i >= 0.
  const Tableau p = tableau_from_slices(l, static_cast<int>(n), [&](int t, std::size_t i) {
    const std::size_t j = i + static_cast<std::size_t>(t);
    return (i < l && j < n) ? pi(i, j) : 0;
  });
  // Slices below the diagonal, pi_{i+r, i}.
  Tableau c = tableau_from_slices(l, static_cast<int>(l), [&](int r, std::size_t i) {
    const std::size_t row = i + static_cast<std::size_t>(r);
    return (row < l && i < n) ? pi(row, i) : 0;
  });
  for (auto& row : c.rows) {
    for (int& v : row) v += static_cast<int>(k);
  }
  Watermelon w{n, m, k, Partition(std::move(diagonal)), std::move(c), complement_tableau(p, n, m)};
  if (!w.is_valid()) throw InternalError("gradient_bijection produced an invalid watermelon");
  return w;
}

PlanePartition gradient_bijection_inverse(const Watermelon& w) {
  if (!w.is_valid()) throw PreconditionError("gradient_bijection_inverse: invalid watermelon");
  const std::size_t n = w.n;
  const std::size_t l = n - w.k;
  const Tableau p = complement_tableau(w.b_tableau, n, w.m);
  Tableau q = w.c_tableau;
  for (auto& row : q.rows) {
    for (int& v : row) v -= static_cast<int>(w.k);
  }
  std::vector<int> parts(l * n, 0);
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      parts[a * n + b] = b >= a ? count_at_most(p, a, static_cast<int>(n - (b - a)))
                                : count_at_most(q, b, static_cast<int>(l - (a - b)));
    }
  }
  return PlanePartition(l, n, std::move(parts));
}

}  // namespace melon
