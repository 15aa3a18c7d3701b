#include <gtest/gtest.h>

#include "perm4/generators.hpp"
#include "perm4/range_counter.hpp"

namespace perm4 {
namespace {

Count naive(const std::vector<WeightedPoint>& pts, std::int64_t xlo, std::int64_t xhi, std::int64_t ylo,
            std::int64_t yhi) {
  Count s = 0;
  for (const auto& p : pts)
    if (xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi) s += p.w;
  return s;
}

std::vector<WeightedPoint> random_points(std::size_t n, std::uint64_t seed, bool unit) {
  SplitMix64 rng(seed);
  const auto xs = random_permutation(n, seed), ys = random_permutation(n, seed + 1000);
  std::vector<WeightedPoint> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back({3 * xs.values()[i] - 7, 5 * ys.values()[i] + 11, unit ? 1 : rng.below(1000)});
  return pts;
}

TEST(RangeCounter, Empty) {
  const RangeCounter rc(std::vector<WeightedPoint>{});
  EXPECT_EQ(rc.rect_sum(kMinusInfinity, kPlusInfinity, kMinusInfinity, kPlusInfinity), Count{0});
}

TEST(RangeCounter, Singleton) {
  const std::vector<WeightedPoint> pts = {{1, 1, 1}};
  const RangeCounter rc(pts);
  EXPECT_EQ(rc.rect_sum(kMinusInfinity, kPlusInfinity, kMinusInfinity, kPlusInfinity), Count{1});
}

TEST(RangeCounter, PointsOf21) {
  const std::vector<WeightedPoint> pts = {{1, 2, 1}, {2, 1, 1}};
  const RangeCounter rc(pts);
  EXPECT_EQ(rc.rect_sum(2, 2, 1, 1), Count{1});
  EXPECT_EQ(rc.rect_sum(10, 20, kMinusInfinity, kPlusInfinity), Count{0});
}

TEST(RangeCounter, RejectsDuplicatesAndInvertedBounds) {
  EXPECT_THROW(RangeCounter(std::vector<WeightedPoint>{{1, 1, 1}, {1, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(RangeCounter(std::vector<WeightedPoint>{{1, 1, 1}, {2, 1, 1}}), std::invalid_argument);
  const RangeCounter rc(std::vector<WeightedPoint>{{1, 1, 1}});
  EXPECT_THROW(rc.rect_sum(2, 1, 0, 0), std::invalid_argument);
  EXPECT_THROW(rc.rect_sum(0, 1, 3, 0), std::invalid_argument);
}

TEST(RangeCounter, UnitWeightsMatchNaive) {
  const auto pts = random_points(100, 1, true);
  const RangeCounter rc(pts);
  SplitMix64 rng(2);
  for (int q = 0; q < 1000; ++q) {
    std::int64_t a = static_cast<std::int64_t>(rng.below(320)) - 10, b = static_cast<std::int64_t>(rng.below(320)) - 10;
    std::int64_t c = static_cast<std::int64_t>(rng.below(530)), d = static_cast<std::int64_t>(rng.below(530));
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    ASSERT_EQ(rc.rect_sum(a, b, c, d), naive(pts, a, b, c, d));
  }
}

TEST(RangeCounter, WeightedMatchNaive) {
  const auto pts = random_points(200, 7, false);
  const RangeCounter rc(pts);
  SplitMix64 rng(8);
  for (int q = 0; q < 500; ++q) {
    std::int64_t a = static_cast<std::int64_t>(rng.below(620)) - 10, b = static_cast<std::int64_t>(rng.below(620)) - 10;
    std::int64_t c = static_cast<std::int64_t>(rng.below(1030)), d = static_cast<std::int64_t>(rng.below(1030));
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    ASSERT_EQ(rc.rect_sum(a, b, c, d), naive(pts, a, b, c, d));
  }
}

TEST(RangeCounter, AdditiveMonotoneAndTotal) {
  const auto pts = random_points(150, 9, false);
  const RangeCounter rc(pts);
  Count total = 0;
  for (const auto& p : pts) total += p.w;
  EXPECT_EQ(rc.rect_sum(kMinusInfinity, kPlusInfinity, kMinusInfinity, kPlusInfinity), total);
  EXPECT_EQ(rc.total_weight(), total);
  SplitMix64 rng(10);
  for (int q = 0; q < 300; ++q) {
    const std::int64_t xlo = static_cast<std::int64_t>(rng.below(200)), xhi = xlo + static_cast<std::int64_t>(rng.below(300));
    const std::int64_t ylo = static_cast<std::int64_t>(rng.below(300)), yhi = ylo + static_cast<std::int64_t>(rng.below(500));
    const std::int64_t cut = xlo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(xhi - xlo + 1)));
    const Count whole = rc.rect_sum(xlo, xhi, ylo, yhi);
    const Count left = rc.rect_sum(xlo, cut, ylo, yhi);
    const Count right = cut < xhi ? rc.rect_sum(cut + 1, xhi, ylo, yhi) : Count{0};
    EXPECT_EQ(whole, left + right);
    EXPECT_LE(whole, rc.rect_sum(xlo - 5, xhi + 5, ylo - 5, yhi + 5));
  }
}

TEST(Fenwick, PrefixSums) {
  Fenwick<std::uint64_t> f(10);
  f.add(3, 5);
  f.add(0, 1);
  f.add(9, 2);
  EXPECT_EQ(f.prefix(0), 0u);
  EXPECT_EQ(f.prefix(4), 6u);
  EXPECT_EQ(f.prefix(10), 8u);
  f.reset(4);
  EXPECT_EQ(f.prefix(4), 0u);
}

}  // namespace
}  // namespace perm4
