#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "perm4/count.hpp"

namespace perm4 {

struct WeightedPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint64_t w = 1;
};

inline constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();
inline constexpr std::int64_t kPlusInfinity = std::numeric_limits<std::int64_t>::max();

/// Static weighted orthogonal range counting.
///
/// A range tree over rank-compressed x: level l stores the y-ranks of every
/// aligned block of 2^l consecutive x-ranks in sorted order, plus running
/// weight prefix sums. A query visits O(log n) blocks and binary-searches each,
/// so rect_sum costs O(log^2 n); build is O(n log n).
class RangeCounter {
 public:
  RangeCounter() = default;
  /// Throws std::invalid_argument on a repeated x or y coordinate, or if the
  /// total weight does not fit in 64 bits.
  explicit RangeCounter(std::span<const WeightedPoint> points);

  std::size_t size() const { return xs_.size(); }
  Count total_weight() const { return total_; }

  /// Sum of weights with xlo <= x <= xhi and ylo <= y <= yhi. Use
  /// kMinusInfinity / kPlusInfinity for open sides. Throws
  /// std::invalid_argument when xlo > xhi or ylo > yhi.
  Count rect_sum(std::int64_t xlo, std::int64_t xhi, std::int64_t ylo, std::int64_t yhi) const;

 private:
  std::uint64_t block_sum(int level, std::size_t begin, std::size_t end, std::uint32_t ylo,
                          std::uint32_t yhi) const;

  std::vector<std::int64_t> xs_;  // sorted distinct x
  std::vector<std::int64_t> ys_;  // sorted distinct y
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::vector<std::uint64_t>> prefix_;  // empty when all weights are 1
  Count total_ = 0;
};

/// Binary indexed tree over [0, n).
template <typename T>
class Fenwick {
 public:
  Fenwick() = default;
  explicit Fenwick(std::size_t n) : tree_(n + 1, T{}) {}

  /// Clears to n zeros, keeping the allocation.
  void reset(std::size_t n) { tree_.assign(n + 1, T{}); }

  void add(std::size_t index, T delta) {
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }
  /// Sum over [0, end).
  T prefix(std::size_t end) const {
    T sum{};
    for (std::size_t i = end; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

 private:
  std::vector<T> tree_;
};

}  // namespace perm4
