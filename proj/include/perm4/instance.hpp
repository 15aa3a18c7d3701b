#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "perm4/permutation.hpp"

namespace perm4 {

enum class Part : std::uint8_t { kLeft, kRight, kBottom, kTop };

/// A divided point set in rank space: s points with x-ranks 0..s-1 and
/// y-ranks 0..s-1, the vertical line between x-ranks cx-1 and cx and the
/// horizontal line between y-ranks cy-1 and cy. Every divided instance is
/// order-isomorphic to exactly one of these.
struct DividedInstance {
  std::vector<std::uint32_t> y;  // y[x] = y-rank of the point with x-rank x
  std::uint32_t cx = 0;          // number of points left of the vertical line
  std::uint32_t cy = 0;          // number of points below the horizontal line

  std::uint32_t size() const { return static_cast<std::uint32_t>(y.size()); }
  bool left(std::uint32_t x) const { return x < cx; }
  bool bottom(std::uint32_t x) const { return y[x] < cy; }
  Region region(std::uint32_t x) const;
  /// Point counts per region.
  Shape census() const;

  /// Throws std::invalid_argument if a point lies on a dividing line.
  static DividedInstance from(const PointSet& ps, const PlaneDivision& div);
  /// Points (x+1, y+1) with the lines halfway between ranks.
  PointSet point_set() const;
  PlaneDivision division() const;

  DividedInstance flipped_x() const;
  DividedInstance flipped_y() const;
  DividedInstance transposed() const;
  /// Reverses the order of the points inside one part along the axis that
  /// crosses the other line: left/right parts are mirrored horizontally,
  /// bottom/top parts vertically. Relations across the line are unchanged.
  DividedInstance with_part_reversed(Part part) const;
  /// The points of a sub-collection of regions, still divided.
  DividedInstance restricted(std::span<const Region> regions) const;
};

/// A symmetry of the square applied as: transpose first, then flips.
struct Dihedral {
  bool transpose = false;
  bool flip_x = false;
  bool flip_y = false;

  DividedInstance apply(const DividedInstance& inst) const;
  Pattern apply(const Pattern& p) const;
  Shape apply(const Shape& s) const;
};

/// All eight elements, identity first.
std::span<const Dihedral> dihedral_group();

/// How a pattern changes when one part of the plane is reversed, given the
/// number of pattern positions left of the line (`left`) and values below it
/// (`bottom`). Left/right reverse the order of those positions; bottom/top
/// reverse the order of those values.
Pattern reverse_pattern_part(const Pattern& p, Part part, int left, int bottom);

}  // namespace perm4
