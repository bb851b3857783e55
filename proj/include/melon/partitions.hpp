#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace melon {

/// Weakly decreasing sequence of nonnegative parts.
///
/// Trailing zeros are kept as given: several identities read a partition as
/// a length-N vector (mu_j = lambda_j + N - j), and the same lambda is used
/// with different N. Accessors past the stored length return 0.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  /// Part i (0-based); zero beyond the stored length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of nonzero parts.
  std::size_t length() const;
  long weight() const;
  /// n(lambda) = sum_i (i-1) lambda_i
  long n_value() const;

  /// Pads with zeros (or drops zero parts) to exactly n parts.
  /// Throws PreconditionError if a nonzero part would be dropped.
  Partition padded(std::size_t n) const;
  /// Partition without trailing zeros.
  Partition trimmed() const;

  /// lambda fits in the rows x max_part rectangle.
  bool fits_in_box(std::size_t rows, int max_part) const;

  /// Complement in the n x m rectangle: (m - lambda_n, ..., m - lambda_1).
  Partition complement(std::size_t n, int m) const;

  /// Equality ignores trailing zeros.
  friend bool operator==(const Partition& a, const Partition& b);

  /// "[5,5,3,2,2,0]"
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Parses "[5,5,3]" (whitespace allowed, "[]" for the empty partition).
/// Throws ParseError on bad syntax or a sequence that is not weakly decreasing.
Partition parse_partition(std::string_view text);

/// Strictly decreasing nonnegative parts.
class StrictPartition {
 public:
  explicit StrictPartition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// mu_j = lambda_j + N - j, j = 1..N.
StrictPartition to_strict(const Partition& lambda, std::size_t n);
/// Inverse of to_strict for the length of mu.
Partition from_strict(const StrictPartition& mu);

/// Site occupation numbers n_0, ..., n_M (index S holds n_S).
struct OccupationConfig {
  std::vector<int> counts;
};

/// lambda = (M^{n_M}, ..., 1^{n_1}, 0^{n_0}).
Partition from_occupation(const OccupationConfig& config);
/// Multiplicities of 0..max_site in a length-n reading of lambda.
OccupationConfig to_occupation(const Partition& lambda, std::size_t n, int max_site);

Partition conjugate(const Partition& lambda);

/// All partitions lambda in the n x m box (at most n parts, each <= m), each
/// returned with exactly n parts.
///
/// Order is colexicographic: the last part is the most significant, smaller
/// vectors first, beginning with the zero partition. For n = 2, m = 2:
/// (0,0) (1,0) (2,0) (1,1) (2,1) (2,2). Yields binomial(n+m, n) values.
class BoxPartitions {
 public:
  BoxPartitions(std::size_t n, int m);
  std::optional<Partition> next();

 private:
  int max_part_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> partitions_in_box(std::size_t n, int m);

}  // namespace melon
