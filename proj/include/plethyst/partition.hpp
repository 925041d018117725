#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace plethyst {

inline constexpr int kDefaultMaxPartitionSize = 30;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Trailing zeros are stripped on construction so equality is structural;
/// indexing past the last part reads as zero. The empty partition is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // "3,1"; the empty partition renders as "".
  std::string to_string() const;

  // Inverse of to_string. Rejects exponent shorthand, zeros inside the
  // sequence, and increasing parts.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Reverse lexicographic comparison of two partitions of the same size:
/// the first differing (zero-padded) part decides, larger part wins.
/// Throws MismatchError if the sizes differ.
std::strong_ordering revlex_cmp(const Partition& a, const Partition& b);

/// Strict weak ordering usable as a map key across sizes: by size, then
/// revlex. Within one size it agrees with revlex_cmp.
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of n, strictly decreasing in revlex order, so (n) comes
/// first and (1^n) last. Throws BoundError when n exceeds max_n.
std::vector<Partition> partitions_of(int n, int max_n = kDefaultMaxPartitionSize);

}  // namespace plethyst
