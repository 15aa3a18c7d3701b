#pragma once

#include <array>
#include <vector>

#include "perm4/count.hpp"
#include "perm4/instance.hpp"
#include "perm4/permutation.hpp"

namespace perm4 {

/// Counts per 4-pattern, indexed by Pattern::index().
using PatternCounts = std::array<Count, 24>;

enum class ShapeFamily {
  kNonProper,
  kProduct,      // two diagonal regions: rotations of 3001 and 2002
  kEndDoubled,   // rotations/reflections of 1102
  kCornerDoubled,  // rotations/reflections of 1201
  kFourPartite,  // 1111
};

ShapeFamily shape_family(const Shape& s);

/// The 18 proper shapes other than 1111.
std::span<const Shape> easy_shapes();

/// Occurrences of every 4-pattern that form exactly `shape` in the divided
/// instance. `shape` must be proper and not 1111 (std::invalid_argument
/// otherwise). Runs in O(s log s).
PatternCounts count_shape(const DividedInstance& inst, const Shape& shape);

/// Oracle: every 4-subset classified by shape_of; entry i belongs to
/// all_shapes()[i].
std::vector<PatternCounts> brute_shape_counts(const DividedInstance& inst);

/// Sum of count_shape over all easy shapes.
PatternCounts count_easy_shapes(const DividedInstance& inst);

// Per-pattern entry points over raw point sets.

/// `shape` must be a rotation of 3001 or 2002.
Count count_product_shape(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape);
/// `shape` must be a rotation or reflection of 1102.
Count count_shape_1102(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape);
/// `shape` must be a rotation or reflection of 1201.
Count count_shape_1201(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape);
/// Occurrences of `p` whose shape is proper and not 4-partite.
Count count_all_easy_shapes(const PointSet& ps, const PlaneDivision& div, const Pattern& p);

}  // namespace perm4
