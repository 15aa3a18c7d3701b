#include "perm4/small_patterns.hpp"

#include <stdexcept>
#include <vector>

#include "perm4/range_counter.hpp"

namespace perm4 {

Pattern SymmetryTransform::apply(const Pattern& p) const {
  Pattern out = p;
  if (reverse) out = out.reversed();
  if (complement) out = out.complemented();
  return out;
}

Permutation SymmetryTransform::apply(const Permutation& perm) const {
  Permutation out = perm;
  if (reverse) out = out.reversed();
  if (complement) out = out.complemented();
  return out;
}

CanonicalPattern symmetry_closure(const Pattern& p) {
  if (p.size() > 3) throw std::invalid_argument("symmetry_closure handles patterns of length <= 3");
  static const std::array<SymmetryTransform, 4> kTransforms = {
      SymmetryTransform{false, false}, SymmetryTransform{false, true}, SymmetryTransform{true, false},
      SymmetryTransform{true, true}};
  for (const auto& t : kTransforms) {
    const Pattern image = t.apply(p);
    const auto d = image.digits();
    if (d == "1" || d == "12" || d == "123" || d == "132") return {image, t};
  }
  throw std::logic_error("unreachable: every short pattern has a canonical image");
}

namespace {

std::vector<WeightedPoint> unit_points(const Permutation& perm) {
  std::vector<WeightedPoint> pts;
  pts.reserve(perm.size());
  for (std::size_t i = 1; i <= perm.size(); ++i) pts.push_back({static_cast<std::int64_t>(i), perm.at(i), 1});
  return pts;
}

}  // namespace

Count count_small_pattern(const Permutation& perm, const Pattern& p) {
  const auto [canonical, transform] = symmetry_closure(p);
  const Permutation pi = transform.apply(perm);
  const auto n = static_cast<std::int64_t>(pi.size());
  if (canonical.size() == 1) return static_cast<Count>(n);

  const auto pts = unit_points(pi);
  const RangeCounter rc(pts);
  // Larger elements to the right of position i.
  auto larger_right = [&](std::int64_t i) -> Count {
    if (i == n || pi.at(i) == n) return 0;
    return rc.rect_sum(i + 1, n, pi.at(i) + 1, n);
  };

  if (canonical.size() == 2) {
    Count total = 0;
    for (std::int64_t i = 1; i <= n; ++i) total += larger_right(i);
    return total;
  }

  Count c123 = 0;
  Count first_with_two_larger = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    const Count smaller_left = (i == 1 || pi.at(i) == 1) ? Count{0} : rc.rect_sum(1, i - 1, 1, pi.at(i) - 1);
    const Count right = larger_right(i);
    c123 += smaller_left * right;
    first_with_two_larger += right * (right - (right > 0 ? 1 : 0)) / 2;
  }
  if (canonical.digits() == "123") return c123;
  return first_with_two_larger - c123;
}

Count count_weighted_pair_pattern(const Permutation& perm, std::span<const std::uint64_t> weights,
                                  const Pattern& p) {
  if (p.size() != 2) throw std::invalid_argument("count_weighted_pair_pattern needs 12 or 21");
  if (weights.size() != perm.size()) throw std::invalid_argument("one weight per position required");
  const auto n = static_cast<std::int64_t>(perm.size());
  std::vector<WeightedPoint> pts;
  pts.reserve(perm.size());
  for (std::int64_t i = 1; i <= n; ++i) pts.push_back({i, perm.at(i), weights[i - 1]});
  const RangeCounter rc(pts);
  const bool increasing = p.at(1) == 1;
  Count total = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    if (i == n) break;
    const std::int64_t v = perm.at(i);
    Count partners = 0;
    if (increasing && v < n) partners = rc.rect_sum(i + 1, n, v + 1, n);
    if (!increasing && v > 1) partners = rc.rect_sum(i + 1, n, 1, v - 1);
    total += partners * weights[i - 1];
  }
  return total;
}

Count SmallProfile::operator[](const Pattern& p) const {
  if (p.size() == 1) return counts[0];
  if (p.size() == 2) return counts[1 + p.index()];
  if (p.size() == 3) return counts[3 + p.index()];
  throw std::invalid_argument("SmallProfile covers lengths 1..3");
}

namespace {

// Acc must hold sums of n^3 / 2.
template <typename Acc>
SmallProfile small_profile_with(std::span<const std::uint32_t> ranks) {
  const std::size_t n = ranks.size();
  // Per element: smaller-left, larger-left; the right-hand counts follow.
  thread_local Fenwick<std::uint32_t> seen;
  seen.reset(n);
  Acc ld_ru = 0, lu_rd = 0, c2_ru = 0, c2_lu = 0, c2_rd = 0, c2_ld = 0, inversions = 0;
  auto c2 = [](Acc v) { return v < 2 ? Acc{0} : v * (v - 1) / 2; };
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = ranks[i];
    const Acc ld = seen.prefix(v);
    const Acc lu = i - ld;
    const Acc rd = v - ld;            // smaller values not yet seen
    const Acc ru = (n - 1 - v) - lu;  // larger values not yet seen
    seen.add(v, 1);
    ld_ru += ld * ru;
    lu_rd += lu * rd;
    c2_ru += c2(ru);
    c2_lu += c2(lu);
    c2_rd += c2(rd);
    c2_ld += c2(ld);
    inversions += rd;
  }
  SmallProfile out;
  auto& c = out.counts;
  c[0] = n;
  c[1] = n < 2 ? 0 : c2(n) - inversions;  // 12
  c[2] = inversions;                       // 21
  // 123, 132, 213, 231, 312, 321
  c[3] = ld_ru;
  c[4] = c2_ru - ld_ru;
  c[5] = c2_ld - ld_ru;
  c[6] = c2_lu - lu_rd;
  c[7] = c2_rd - lu_rd;
  c[8] = lu_rd;
  return out;
}

}  // namespace

SmallProfile small_profile(std::span<const std::uint32_t> ranks) {
  if (ranks.size() <= (std::size_t{1} << 20)) return small_profile_with<std::uint64_t>(ranks);
  return small_profile_with<Count>(ranks);
}

}  // namespace perm4
