#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "perm4/count.hpp"
#include "perm4/instance.hpp"
#include "perm4/permutation.hpp"
#include "perm4/shape_counting.hpp"

namespace perm4 {

/// A node interval [lo, hi] of the complete binary tree over the padded
/// universe 1..n', n' = 2^ceil(log2 n).
struct BaseRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;

  std::int64_t length() const { return hi - lo + 1; }
  /// The line between the two children, doubled. For a leaf: the line just
  /// right of (above) the leaf.
  std::int64_t split2() const { return length() == 1 ? 2 * hi + 1 : 2 * (lo + length() / 2) - 1; }
  friend bool operator==(const BaseRange&, const BaseRange&) = default;
};

/// Smallest base range containing every coordinate in `coords` (1-based, at
/// least one coordinate).
BaseRange minimal_base_range(std::span<const std::int64_t> coords);

struct RelevantPair {
  BaseRange rx;
  BaseRange ry;
  PointSet pts;

  PlaneDivision division() const { return PlaneDivision::from_doubled(rx.split2(), ry.split2()); }
};

/// One relevant pair as seen by the streaming enumerator. Buffers are only
/// valid during the callback.
struct PairView {
  BaseRange rx;
  BaseRange ry;
  std::span<const std::uint32_t> positions;  // 0-based, ascending
  std::span<const std::uint32_t> y;          // y-ranks inside the pair, in x order
  std::uint32_t cx = 0;                      // points left of the vertical split
  std::uint32_t cy = 0;                      // points below the horizontal split
};

/// Calls `fn` for every relevant pair with at least `min_points` points.
/// Bottom-up merge over position ranges; O(n log^2 n) time, O(n) memory.
void for_each_relevant_pair(const Permutation& perm, std::size_t min_points,
                            const std::function<void(const PairView&)>& fn);

/// Every relevant pair (non-empty point set), materialized.
std::vector<RelevantPair> relevant_pairs(const Permutation& perm);

/// The 24 counts of a length-4 profile, indexed by Pattern::index().
struct Profile4 {
  PatternCounts counts{};

  Count operator[](const Pattern& p) const { return counts[p.index()]; }
  Count total() const;
};

/// The part reversals taking a non-trivial pattern to 1324.
struct Normalization {
  bool left = false;
  bool right = false;
  bool bottom = false;
  bool top = false;
};

/// Throws std::invalid_argument for trivial patterns.
Normalization normalization_for(const Pattern& p);

std::pair<PointSet, PlaneDivision> normalize_to_1324(const PointSet& ps, const PlaneDivision& div, const Pattern& p);
DividedInstance normalize_to_1324(const DividedInstance& inst, const Pattern& p);

/// Occurrences of the non-trivial pattern `p` with one point per region,
/// through the layered multigraph reduction.
Count count_4partite(const DividedInstance& inst, const Pattern& p);
Count count_4partite(const PointSet& ps, const PlaneDivision& div, const Pattern& p);

using PointSetCounter = std::function<Count(const PointSet&, const Pattern&)>;

/// Sum over region subsets S of (-1)^|S| counter(points in S).
Count four_partite_by_inclusion_exclusion(const PointSet& ps, const PlaneDivision& div, const Pattern& p,
                                          const PointSetCounter& counter);

Count count_pattern4(const Permutation& perm, const Pattern& p);

/// All 24 counts. Throws std::logic_error if they do not sum to C(n, 4).
Profile4 full_profile4(const Permutation& perm);

/// The eight trivial counts only (other entries are 0), via easy shapes.
Profile4 trivial_profile4(const Permutation& perm);

struct Rational {
  SignedCount num = 0;
  Count den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// (sum of the trivial counts) / C(n, 4) - 1/3, reduced. Throws
/// std::invalid_argument when n < 4.
Rational tau_star(const Profile4& profile, std::uint64_t n);

}  // namespace perm4
