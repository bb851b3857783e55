#include "melon/tableau.hpp"

#include <algorithm>

#include "melon/errors.hpp"

namespace melon {

Partition Tableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

bool Tableau::is_semistandard(int lo, int hi) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v < lo || v > hi) return false;
      if (j > 0 && v < rows[i][j - 1]) return false;
      if (i > 0 && v <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::content(int max_letter) const {
  std::vector<int> out(static_cast<std::size_t>(std::max(max_letter, 0)), 0);
  for (const auto& r : rows) {
    for (int v : r) {
      if (v < 1 || v > max_letter) throw PreconditionError("tableau letter out of range");
      ++out[static_cast<std::size_t>(v - 1)];
    }
  }
  return out;
}

std::string Tableau::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(rows[i][j]);
    }
    out += ']';
  }
  return out + "]";
}

namespace {

struct SsytFiller {
  std::vector<int> shape;
  std::vector<int> column_height;
  int lo;
  int hi;
  Tableau t;
  const std::function<bool(const Tableau&)>& visit;

  // Returns false when the visitor asked to stop.
  bool fill(std::size_t row, std::size_t col) {
    if (row == shape.size()) return visit(t);
    if (col == static_cast<std::size_t>(shape[row])) return fill(row + 1, 0);
    int low = lo;
    if (col > 0) low = std::max(low, t.rows[row][col - 1]);
    if (row > 0) low = std::max(low, t.rows[row - 1][col] + 1);
    // Cells below in this column still need strictly larger letters.
    const int high = hi - (column_height[col] - static_cast<int>(row) - 1);
    for (int v = low; v <= high; ++v) {
      t.rows[row][col] = v;
      if (!fill(row, col + 1)) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_ssyt(const Partition& shape, int lo, int hi,
                   const std::function<bool(const Tableau&)>& visit) {
  const Partition trimmed = shape.trimmed();
  SsytFiller f{trimmed.parts(), conjugate(trimmed).parts(), lo, hi, {}, visit};
  for (int len : f.shape) f.t.rows.emplace_back(static_cast<std::size_t>(len), 0);
  f.fill(0, 0);
}

std::vector<Tableau> ssyt_list(const Partition& shape, int lo, int hi) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, lo, hi, [&](const Tableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace melon
