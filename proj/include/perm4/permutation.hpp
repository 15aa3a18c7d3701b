#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perm4/count.hpp"

namespace perm4 {

/// Raised by the text parsers. `position` is the 1-based token index (or
/// line number for line-oriented formats) where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { kNotAnInteger, kNotABijection, kMalformed };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A bijection on {1..n}; values()[i] is the image of position i+1.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `values` is a bijection on {1..n}.
  explicit Permutation(std::vector<std::int32_t> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  std::span<const std::int32_t> values() const { return values_; }
  /// 1-based access: at(i) = pi(i).
  std::int32_t at(std::size_t position) const { return values_[position - 1]; }

  Permutation reversed() const;
  Permutation complemented() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int32_t> values_;
};

/// A permutation of length 1..4.
class Pattern {
 public:
  Pattern() = default;
  /// Throws std::invalid_argument unless 1 <= size <= 4 and a bijection.
  explicit Pattern(std::span<const int> values);
  Pattern(std::initializer_list<int> values);

  /// Parses a digit string such as "1324".
  static Pattern from_digits(std::string_view digits);
  /// The 4-pattern with lexicographic rank `index` in [0, 24).
  static Pattern from_index4(int index);

  int size() const { return size_; }
  /// 1-based: value at pattern position j.
  int at(int position) const { return values_[position - 1]; }
  std::span<const std::uint8_t> values() const { return {values_.data(), static_cast<std::size_t>(size_)}; }

  /// Lexicographic rank among all size()! patterns of the same length.
  int index() const;
  std::string digits() const;

  Pattern reversed() const;
  Pattern complemented() const;
  Pattern inverse() const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.size_ == b.size_ && a.values_ == b.values_;
  }

 private:
  std::array<std::uint8_t, 4> values_{};
  int size_ = 0;
};

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Points with pairwise distinct x and pairwise distinct y coordinates.
class PointSet {
 public:
  PointSet() = default;
  /// Throws std::invalid_argument on a repeated coordinate.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<Point> points_;
};

/// A vertical line x = v and a horizontal line y = h, stored doubled so the
/// lines can sit strictly between integer coordinates.
struct PlaneDivision {
  std::int64_t v2 = 0;
  std::int64_t h2 = 0;

  static PlaneDivision from_doubled(std::int64_t v2, std::int64_t h2) { return {v2, h2}; }
  /// The lines x = v + 1/2 and y = h + 1/2.
  static PlaneDivision between(std::int64_t v, std::int64_t h) { return {2 * v + 1, 2 * h + 1}; }

  bool on_line(const Point& p) const { return 2 * p.x == v2 || 2 * p.y == h2; }
  bool left(const Point& p) const { return 2 * p.x < v2; }
  bool bottom(const Point& p) const { return 2 * p.y < h2; }
};

enum class Region : std::uint8_t { kTopLeft = 0, kTopRight = 1, kBottomLeft = 2, kBottomRight = 3 };

/// Per-region tally (top-left, top-right, bottom-left, bottom-right) of a
/// 4-point configuration.
struct Shape {
  int tl = 0;
  int tr = 0;
  int bl = 0;
  int br = 0;

  int total() const { return tl + tr + bl + br; }
  int operator[](Region r) const;
  /// Both lines separate the points.
  bool proper() const;
  bool four_partite() const { return tl == 1 && tr == 1 && bl == 1 && br == 1; }
  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

/// Every Shape with total 4, in lexicographic (tl, tr, bl, br) order.
std::span<const Shape> all_shapes();

Permutation parse_permutation(std::istream& in);
Permutation parse_permutation(std::string_view text);

PointSet points_of(const Permutation& perm);

enum class PatternClass { kTrivial, kNonTrivial };

/// Trivial 4-patterns cannot place one point in each quadrant of any division.
/// Throws std::invalid_argument for patterns that are not of length 4.
PatternClass classify_pattern(const Pattern& p);
inline bool is_trivial(const Pattern& p) { return classify_pattern(p) == PatternClass::kTrivial; }

/// The shape pattern `p` necessarily forms when exactly `left` of its
/// positions lie left of the vertical line and exactly `bottom` of its values
/// lie below the horizontal line.
Shape forced_shape(const Pattern& p, int left, int bottom);
/// True when some occurrence of `p` can form `shape`.
bool pattern_forms_shape(const Pattern& p, const Shape& shape);

/// Exhaustive count over all index subsets. The project-wide oracle.
Count brute_count_pattern(const Permutation& perm, const Pattern& p);
/// Same oracle over an arbitrary point set (order by x, compare by y).
Count brute_count_pattern(const PointSet& ps, const Pattern& p);
/// All 24 4-pattern counts in one exhaustive O(n^4) pass, indexed by
/// Pattern::index().
std::array<Count, 24> brute_profile4(const Permutation& perm);

/// Throws std::invalid_argument if a point lies on a dividing line.
Shape shape_of(std::span<const Point> quadruple, const PlaneDivision& div);

}  // namespace perm4
