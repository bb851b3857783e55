#pragma once

#include <functional>
#include <string>
#include <vector>

#include "melon/partitions.hpp"

namespace melon {

/// Filling of a Young diagram, stored row by row (top row first).
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  /// Weakly increasing along rows, strictly increasing down columns, entries
  /// in [lo, hi].
  bool is_semistandard(int lo, int hi) const;
  /// Occurrences of each letter 1..max_letter (index 0 holds letter 1).
  std::vector<int> content(int max_letter) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
  std::string to_string() const;
};

/// Visits every semistandard tableau of the given shape with entries in
/// [lo, hi], in lexicographic order of the row-major reading. The visitor
/// returns false to stop early.
void for_each_ssyt(const Partition& shape, int lo, int hi,
                   const std::function<bool(const Tableau&)>& visit);

std::vector<Tableau> ssyt_list(const Partition& shape, int lo, int hi);

}  // namespace melon
