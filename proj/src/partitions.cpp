#include "melon/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "melon/errors.hpp"

namespace melon {

namespace {

bool weakly_decreasing_nonneg(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i > 0 && v[i] > v[i - 1]) return false;
  }
  return true;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!weakly_decreasing_nonneg(parts_)) {
    throw PreconditionError("partition parts must be nonnegative and weakly decreasing");
  }
}

std::size_t Partition::length() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

long Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

long Partition::n_value() const {
  long n = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) n += static_cast<long>(i) * parts_[i];
  return n;
}

Partition Partition::padded(std::size_t n) const {
  if (length() > n) throw PreconditionError("partition " + to_string() + " has more than " + std::to_string(n) + " nonzero parts");
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n && i < parts_.size(); ++i) out[i] = parts_[i];
  return Partition(std::move(out));
}

Partition Partition::trimmed() const { return padded(length()); }

bool Partition::fits_in_box(std::size_t rows, int max_part) const {
  return length() <= rows && (*this)[0] <= max_part;
}

Partition Partition::complement(std::size_t n, int m) const {
  if (!fits_in_box(n, m)) throw PreconditionError("complement: partition does not fit the box");
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m - (*this)[n - 1 - i];
  return Partition(std::move(out));
}

bool operator==(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("partition must be written as [p1,p2,...]: '" + std::string(text) + "'");
  }
  std::vector<int> parts;
  std::string_view body(s.data() + 1, s.size() - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("bad partition part '" + std::string(item) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw ParseError("trailing comma in partition");
  }
  if (!weakly_decreasing_nonneg(parts)) {
    throw ParseError("partition parts must be nonnegative and weakly decreasing: " + std::string(text));
  }
  return Partition(std::move(parts));
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] >= parts_[i - 1])) {
      throw PreconditionError("strict partition parts must be nonnegative and strictly decreasing");
    }
  }
}

StrictPartition to_strict(const Partition& lambda, std::size_t n) {
  const Partition padded = lambda.padded(n);
  std::vector<int> mu(n);
  for (std::size_t j = 0; j < n; ++j) mu[j] = padded[j] + static_cast<int>(n - 1 - j);
  return StrictPartition(std::move(mu));
}

Partition from_strict(const StrictPartition& mu) {
  const auto& m = mu.parts();
  const std::size_t n = m.size();
  std::vector<int> lambda(n);
  for (std::size_t j = 0; j < n; ++j) lambda[j] = m[j] - static_cast<int>(n - 1 - j);
  return Partition(std::move(lambda));
}

Partition from_occupation(const OccupationConfig& config) {
  std::vector<int> parts;
  for (std::size_t s = config.counts.size(); s-- > 0;) {
    if (config.counts[s] < 0) throw PreconditionError("negative occupation number");
    parts.insert(parts.end(), static_cast<std::size_t>(config.counts[s]), static_cast<int>(s));
  }
  return Partition(std::move(parts));
}

OccupationConfig to_occupation(const Partition& lambda, std::size_t n, int max_site) {
  if (!lambda.fits_in_box(n, max_site)) throw PreconditionError("to_occupation: partition exceeds the box");
  OccupationConfig config{std::vector<int>(static_cast<std::size_t>(max_site) + 1, 0)};
  for (std::size_t i = 0; i < n; ++i) ++config.counts[static_cast<std::size_t>(lambda[i])];
  return config;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda[0]), 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    int height = 0;
    while (lambda[static_cast<std::size_t>(height)] > static_cast<int>(c)) ++height;
    out[c] = height;
  }
  return Partition(std::move(out));
}

BoxPartitions::BoxPartitions(std::size_t n, int m) : max_part_(m), current_(n, 0) {
  if (m < 0) throw PreconditionError("box width must be nonnegative");
}

std::optional<Partition> BoxPartitions::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition(current_);
  }
  // Smallest index whose part can grow; everything before it drops to the
  // new value, which is the least completion in colex order.
  for (std::size_t i = 0; i < current_.size(); ++i) {
    const int cap = i == 0 ? max_part_ : current_[i - 1];
    if (current_[i] < cap) {
      const int v = current_[i] + 1;
      for (std::size_t j = 0; j <= i; ++j) current_[j] = v;
      return Partition(current_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Partition> partitions_in_box(std::size_t n, int m) {
  std::vector<Partition> out;
  BoxPartitions stream(n, m);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace melon
