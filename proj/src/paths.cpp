#include "melon/paths.hpp"

#include <algorithm>

#include "melon/errors.hpp"
#include "melon/poly_matrix.hpp"
#include "melon/qcombinat.hpp"

namespace melon {

namespace {

int count_letter(const std::vector<int>& row, int letter) {
  return static_cast<int>(std::count(row.begin(), row.end(), letter));
}

const std::vector<int>& row_or_empty(const Tableau& t, std::size_t r) {
  static const std::vector<int> empty;
  return r < t.rows.size() ? t.rows[r] : empty;
}

// Builds a row-major tableau from per-row letter multiplicities; trailing
// empty rows are dropped.
Tableau tableau_from_counts(const std::vector<std::vector<int>>& counts) {
  Tableau t;
  for (const auto& per_letter : counts) {
    std::vector<int> row;
    for (std::size_t e = 0; e < per_letter.size(); ++e) {
      row.insert(row.end(), static_cast<std::size_t>(per_letter[e]), static_cast<int>(e) + 1);
    }
    t.rows.push_back(std::move(row));
  }
  while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
  return t;
}

std::vector<int> column_sums(const std::vector<std::vector<int>>& steps, std::size_t n) {
  std::vector<int> l(n, 0);
  for (const auto& path : steps) {
    for (std::size_t j = 0; j < n; ++j) l[j] += path[j];
  }
  return l;
}

}  // namespace

std::vector<int> CNest::line_steps() const { return column_sums(path_steps, n); }

long CNest::volume() const {
  const auto l = line_steps();
  long v = 0;
  for (std::size_t j = 0; j < n; ++j) v += static_cast<long>(j) * l[j];
  return v;
}

long CNest::weighted_volume() const {
  const auto l = line_steps();
  long v = 0;
  for (std::size_t j = 0; j < n; ++j) v += static_cast<long>(j + 1) * l[j];
  return v;
}

CNest nest_from_tableau(const Tableau& t, std::size_t n) {
  if (t.rows.size() > n || !t.is_semistandard(1, static_cast<int>(n))) {
    throw PreconditionError("nest_from_tableau: need a semistandard tableau with entries <= N");
  }
  CNest nest{n, t.shape().padded(n), std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = row_or_empty(t, i);
    for (std::size_t j = 0; j < n; ++j) nest.path_steps[i][j] = count_letter(row, static_cast<int>(n - j));
  }
  return nest;
}

Tableau tableau_from_nest(const CNest& nest) {
  std::vector<std::vector<int>> counts(nest.n, std::vector<int>(nest.n, 0));
  for (std::size_t i = 0; i < nest.n; ++i) {
    for (std::size_t e = 1; e <= nest.n; ++e) counts[i][e - 1] = nest.path_steps[i][nest.n - e];
  }
  return tableau_from_counts(counts);
}

std::vector<int> BNest::line_steps() const { return column_sums(path_steps, n); }

long BNest::volume() const {
  const auto l = line_steps();
  long v = 0;
  for (std::size_t j = 0; j < n; ++j) v += static_cast<long>(j) * (m - l[j]);
  return v;
}

BNest bnest_from_tableau(const Tableau& complement_tableau, const Partition& lambda, std::size_t n, int m) {
  const Partition padded = lambda.padded(n);
  if (!(complement_tableau.shape() == padded.complement(n, m)) ||
      !complement_tableau.is_semistandard(1, static_cast<int>(n))) {
    throw PreconditionError("bnest_from_tableau: tableau must be semistandard of the complementary shape");
  }
  BNest nest{n, m, padded, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = row_or_empty(complement_tableau, n - 1 - i);
    for (std::size_t j = 0; j < n; ++j) nest.path_steps[i][j] = count_letter(row, static_cast<int>(n - j));
  }
  return nest;
}

Tableau tableau_from_bnest(const BNest& nest) {
  std::vector<std::vector<int>> counts(nest.n, std::vector<int>(nest.n, 0));
  for (std::size_t r = 0; r < nest.n; ++r) {
    const auto& path = nest.path_steps[nest.n - 1 - r];
    for (std::size_t e = 1; e <= nest.n; ++e) counts[r][e - 1] = path[nest.n - e];
  }
  return tableau_from_counts(counts);
}

Tableau complement_tableau(const Tableau& t, std::size_t n, int m) {
  const Partition shape = t.shape();
  if (!shape.fits_in_box(n, m) || !t.is_semistandard(1, static_cast<int>(n))) {
    throw PreconditionError("complement_tableau: tableau must be semistandard inside the box");
  }
  const auto mm = static_cast<std::size_t>(m);
  std::vector<std::vector<int>> columns(mm);
  for (std::size_t c = 0; c < mm; ++c) {
    std::vector<bool> present(n + 1, false);
    for (const auto& row : t.rows) {
      if (c < row.size()) present[static_cast<std::size_t>(row[c])] = true;
    }
    auto& out = columns[mm - 1 - c];
    for (std::size_t e = 1; e <= n; ++e) {
      if (!present[e]) out.push_back(static_cast<int>(e));
    }
  }
  Tableau result;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<int> row;
    for (std::size_t c = 0; c < mm && r < columns[c].size(); ++c) row.push_back(columns[c][r]);
    if (row.empty()) break;
    result.rows.push_back(std::move(row));
  }
  return result;
}

CNest Watermelon::c_nest() const { return nest_from_tableau(c_tableau, n); }

BNest Watermelon::b_nest() const { return bnest_from_tableau(b_tableau, lambda, n, m); }

long Watermelon::volume() const { return c_nest().weighted_volume() + b_nest().volume(); }

std::vector<int> Watermelon::horizontal_reading() const {
  std::vector<int> reading(n + static_cast<std::size_t>(m), 0);
  for (const auto& path : lattice_paths(*this)) {
    for (std::size_t s = 1; s < path.size(); ++s) {
      if (path[s].x != path[s - 1].x) ++reading[static_cast<std::size_t>(path[s].y)];
    }
  }
  return reading;
}

bool Watermelon::is_valid() const {
  if (k > n || lambda.size() != n || !lambda.fits_in_box(n - k, m)) return false;
  if (!(c_tableau.shape() == lambda) || !c_tableau.is_semistandard(static_cast<int>(k) + 1, static_cast<int>(n))) {
    return false;
  }
  return b_tableau.shape() == lambda.complement(n, m) && b_tableau.is_semistandard(1, static_cast<int>(n));
}

std::vector<LatticePoint> watermelon_starts(std::size_t n) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({static_cast<int>(i), static_cast<int>(n - 1 - i)});
  return out;
}

std::vector<LatticePoint> watermelon_deviation_starts(std::size_t n, std::size_t k) {
  auto out = watermelon_starts(n);
  for (auto& p : out) p.x += static_cast<int>(k);
  return out;
}

std::vector<LatticePoint> watermelon_ends(std::size_t n, int m) {
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({static_cast<int>(n + i), static_cast<int>(n) + m - 1 - static_cast<int>(i)});
  }
  return out;
}

std::vector<std::vector<LatticePoint>> lattice_paths(const Watermelon& w) {
  const CNest c = w.c_nest();
  const BNest b = w.b_nest();
  const auto starts = watermelon_starts(w.n);
  std::vector<std::vector<LatticePoint>> paths;
  for (std::size_t i = 0; i < w.n; ++i) {
    std::vector<LatticePoint> path{starts[i]};
    LatticePoint at = starts[i];
    auto north = [&](int count) {
      for (int s = 0; s < count; ++s) {
        ++at.y;
        path.push_back(at);
      }
    };
    auto east = [&] {
      ++at.x;
      path.push_back(at);
    };
    // C side: lines x_{N-i}, ..., x_1 (0-based i), then the connector step.
    for (std::size_t j = w.n - i; j-- > 0;) {
      north(c.path_steps[i][j]);
      east();
    }
    // B side: lines x_1, ..., x_{i+1}.
    for (std::size_t j = 0; j <= i; ++j) {
      north(b.path_steps[i][j]);
      if (j < i) east();
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

WatermelonStream::WatermelonStream(std::size_t n, int m, std::size_t k)
    : n_(n), m_(m), k_(k), shapes_(k <= n ? n - k : 0, m) {
  if (k > n) throw PreconditionError("watermelon deviation k exceeds N");
  exhausted_ = !load_next_shape();
}

bool WatermelonStream::load_next_shape() {
  auto shape = shapes_.next();
  if (!shape) return false;
  lambda_ = shape->padded(n_);
  c_list_ = ssyt_list(lambda_, static_cast<int>(k_) + 1, static_cast<int>(n_));
  b_list_ = ssyt_list(lambda_.complement(n_, m_), 1, static_cast<int>(n_));
  ci_ = 0;
  bi_ = 0;
  if (c_list_.empty() || b_list_.empty()) throw InternalError("watermelon shape without tableaux");
  return true;
}

std::optional<Watermelon> WatermelonStream::next() {
  if (exhausted_) return std::nullopt;
  Watermelon w{n_, m_, k_, lambda_, c_list_[ci_], b_list_[bi_]};
  if (++bi_ == b_list_.size()) {
    bi_ = 0;
    if (++ci_ == c_list_.size()) exhausted_ = !load_next_shape();
  }
  return w;
}

LaurentPoly watermelon_genfunc(std::size_t n, int m, std::size_t k) {
  std::vector<LaurentPoly::Term> terms;
  WatermelonStream stream(n, m, k);
  while (auto w = stream.next()) terms.push_back({w->volume(), 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly closed_genfunc(long n, long l, long m) {
  if (n < 0 || l < 0 || m < 0) throw PreconditionError("closed_genfunc: negative box size");
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

BigInt count_deviation(long n, long l, long m) {
  if (n < 0 || l < 0 || m < 0) throw PreconditionError("count_deviation: negative box size");
  mpq_class product(1);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= m; ++j) product *= mpq_class(l + i + j - 1, i + j - 1);
  }
  product.canonicalize();
  if (product.get_den() != 1) throw InternalError("count_deviation: product is not an integer");
  return product.get_num();
}

BigInt count_deviation_det(long n, long l, long m, int form) {
  if (n < 0 || l < 0 || m < 0) throw PreconditionError("count_deviation_det: negative box size");
  const auto size = static_cast<std::size_t>(n);
  if (form == 1) {
    return det_fraction_free(IntMatrix::generate(size, size, [&](std::size_t i0, std::size_t j0) {
      const long i = static_cast<long>(i0) + 1, j = static_cast<long>(j0) + 1;
      return binomial(l + m + n - i, m + n - j);
    }));
  }
  if (form == 2) {
    return det_fraction_free(IntMatrix::generate(size, size, [&](std::size_t i0, std::size_t j0) {
      const long i = static_cast<long>(i0) + 1, j = static_cast<long>(j0) + 1;
      return binomial(l + m + n + j - i - 1, l + j - i);
    }));
  }
  throw PreconditionError("count_deviation_det: form must be 1 or 2");
}

Exponent det_form_offset(long n, long l) { return l * n * (n - 1) / 2; }

LaurentPoly genfunc_det_forms(long n, long l, long m, int form) {
  if (n < 0 || l < 0 || m < 0) throw PreconditionError("genfunc_det_forms: negative box size");
  const auto size = static_cast<std::size_t>(n);
  LaurentPoly det;
  if (form == 1) {
    det = det_fraction_free(PolyMatrix::generate(size, size, [&](std::size_t i0, std::size_t j0) {
      const long i = static_cast<long>(i0) + 1, j = static_cast<long>(j0) + 1;
      return qbinomial(l + m + n - i, m + n - j).shifted((j - 1) * (l + j - i));
    }));
  } else if (form == 2) {
    det = det_fraction_free(PolyMatrix::generate(size, size, [&](std::size_t i0, std::size_t j0) {
      const long i = static_cast<long>(i0) + 1, j = static_cast<long>(j0) + 1;
      return h_complete(l + j - i, n + m);
    }));
  } else {
    throw PreconditionError("genfunc_det_forms: form must be 1 or 2");
  }
  return det.shifted(-det_form_offset(n, l));
}

BigInt gv_count(const Partition& lambda, std::size_t n) {
  const Partition padded = lambda.padded(n);
  return det_fraction_free(IntMatrix::generate(n, n, [&](std::size_t i0, std::size_t j0) {
    const long i = static_cast<long>(i0) + 1, j = static_cast<long>(j0) + 1;
    return binomial(padded[i0] + static_cast<long>(n) - i, static_cast<long>(n) - j);
  }));
}

}  // namespace melon
