#include "perm4/range_counter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace perm4 {

RangeCounter::RangeCounter(std::span<const WeightedPoint> points) {
  const std::size_t n = points.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });

  xs_.reserve(n);
  ys_.reserve(n);
  bool unit = true;
  for (const auto& p : points) {
    ys_.push_back(p.y);
    unit = unit && p.w == 1;
  }
  for (auto i : order) xs_.push_back(points[i].x);
  std::sort(ys_.begin(), ys_.end());
  if (std::adjacent_find(xs_.begin(), xs_.end()) != xs_.end() ||
      std::adjacent_find(ys_.begin(), ys_.end()) != ys_.end()) {
    throw std::invalid_argument("range counter input repeats a coordinate");
  }

  // Level 0: y-ranks in x order; weights travel alongside during the merges.
  std::vector<std::uint32_t> level(n);
  std::vector<std::uint64_t> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = points[order[i]];
    level[i] = static_cast<std::uint32_t>(std::lower_bound(ys_.begin(), ys_.end(), p.y) - ys_.begin());
    weight[i] = p.w;
  }

  auto push_level = [&](const std::vector<std::uint32_t>& lv, const std::vector<std::uint64_t>& w) {
    levels_.push_back(lv);
    if (!unit) {
      std::vector<std::uint64_t> pre(n + 1, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (pre[i] > std::numeric_limits<std::uint64_t>::max() - w[i]) {
          throw std::invalid_argument("range counter total weight overflows 64 bits");
        }
        pre[i + 1] = pre[i] + w[i];
      }
      prefix_.push_back(std::move(pre));
    }
  };

  push_level(level, weight);
  for (std::size_t width = 1; width < n; width *= 2) {
    std::vector<std::uint32_t> next(n);
    std::vector<std::uint64_t> next_w(unit ? 0 : n);
    for (std::size_t begin = 0; begin < n; begin += 2 * width) {
      const std::size_t mid = std::min(begin + width, n);
      const std::size_t end = std::min(begin + 2 * width, n);
      std::size_t a = begin, b = mid, out = begin;
      while (a < mid || b < end) {
        const bool take_a = b >= end || (a < mid && level[a] < level[b]);
        const std::size_t src = take_a ? a++ : b++;
        next[out] = level[src];
        if (!unit) next_w[out] = weight[src];
        ++out;
      }
    }
    level = std::move(next);
    weight = std::move(next_w);
    push_level(level, weight);
  }

  if (unit) {
    total_ = n;
  } else {
    total_ = n == 0 ? 0 : prefix_.front().back();
  }
}

std::uint64_t RangeCounter::block_sum(int level, std::size_t begin, std::size_t end, std::uint32_t ylo,
                                      std::uint32_t yhi) const {
  const auto& lv = levels_[level];
  const auto lo = static_cast<std::size_t>(std::lower_bound(lv.begin() + begin, lv.begin() + end, ylo) - lv.begin());
  const auto hi = static_cast<std::size_t>(std::lower_bound(lv.begin() + lo, lv.begin() + end, yhi) - lv.begin());
  if (prefix_.empty()) return hi - lo;
  return prefix_[level][hi] - prefix_[level][lo];
}

Count RangeCounter::rect_sum(std::int64_t xlo, std::int64_t xhi, std::int64_t ylo, std::int64_t yhi) const {
  if (xlo > xhi || ylo > yhi) throw std::invalid_argument("rect_sum: inverted bounds");
  const std::size_t n = xs_.size();
  if (n == 0) return 0;
  // Half-open rank intervals [a, b) and [c, d).
  auto a = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), xlo) - xs_.begin());
  auto b = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), xhi) - xs_.begin());
  const auto c = static_cast<std::uint32_t>(std::lower_bound(ys_.begin(), ys_.end(), ylo) - ys_.begin());
  const auto d = static_cast<std::uint32_t>(std::upper_bound(ys_.begin(), ys_.end(), yhi) - ys_.begin());
  if (a >= b || c >= d) return 0;

  Count sum = 0;
  for (int level = 0; a < b; ++level) {
    const std::size_t width = std::size_t{1} << level;
    if (a & 1) {
      sum += block_sum(level, a * width, std::min((a + 1) * width, n), c, d);
      ++a;
    }
    if (b & 1) {
      --b;
      sum += block_sum(level, b * width, std::min((b + 1) * width, n), c, d);
    }
    a >>= 1;
    b >>= 1;
  }
  return sum;
}

}  // namespace perm4
