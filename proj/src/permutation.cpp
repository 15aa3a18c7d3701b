#include "perm4/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace perm4 {
namespace {

bool is_bijection(std::span<const std::int32_t> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (auto v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

constexpr std::array<int, 5> kFactorial = {1, 1, 2, 6, 24};

// Rank of the order type of `values` (distinct) among |values|! patterns.
template <typename Range>
int order_type_index(const Range& values, int k) {
  // Lehmer code over the relative order.
  int index = 0;
  for (int i = 0; i < k; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < k; ++j) {
      if (values[j] < values[i]) ++smaller_after;
    }
    index += smaller_after * kFactorial[k - 1 - i];
  }
  return index;
}

}  // namespace

Permutation::Permutation(std::vector<std::int32_t> values) : values_(std::move(values)) {
  if (!is_bijection(values_)) throw std::invalid_argument("permutation values are not a bijection on 1..n");
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::int32_t> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation Permutation::reversed() const {
  Permutation out;
  out.values_.assign(values_.rbegin(), values_.rend());
  return out;
}

Permutation Permutation::complemented() const {
  Permutation out;
  const auto n = static_cast<std::int32_t>(values_.size());
  out.values_.reserve(values_.size());
  for (auto v : values_) out.values_.push_back(n + 1 - v);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.values_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out.values_[values_[i] - 1] = static_cast<std::int32_t>(i + 1);
  }
  return out;
}

Pattern::Pattern(std::span<const int> values) {
  if (values.empty() || values.size() > 4) throw std::invalid_argument("pattern length must be 1..4");
  size_ = static_cast<int>(values.size());
  std::array<bool, 5> seen{};
  for (int i = 0; i < size_; ++i) {
    const int v = values[i];
    if (v < 1 || v > size_ || seen[v]) throw std::invalid_argument("pattern is not a bijection");
    seen[v] = true;
    values_[i] = static_cast<std::uint8_t>(v);
  }
}

Pattern::Pattern(std::initializer_list<int> values)
    : Pattern(std::span<const int>(values.begin(), values.size())) {}

Pattern Pattern::from_digits(std::string_view digits) {
  std::vector<int> values;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("pattern must be a digit string like 1324");
    values.push_back(c - '0');
  }
  return Pattern(values);
}

Pattern Pattern::from_index4(int index) {
  if (index < 0 || index >= 24) throw std::out_of_range("4-pattern index out of range");
  std::vector<int> pool = {1, 2, 3, 4};
  std::vector<int> values;
  for (int i = 0; i < 4; ++i) {
    const int f = kFactorial[3 - i];
    const int pick = index / f;
    index %= f;
    values.push_back(pool[pick]);
    pool.erase(pool.begin() + pick);
  }
  return Pattern(values);
}

int Pattern::index() const { return order_type_index(values_, size_); }

std::string Pattern::digits() const {
  std::string out;
  for (int i = 0; i < size_; ++i) out.push_back(static_cast<char>('0' + values_[i]));
  return out;
}

Pattern Pattern::reversed() const {
  Pattern out = *this;
  std::reverse(out.values_.begin(), out.values_.begin() + size_);
  return out;
}

Pattern Pattern::complemented() const {
  Pattern out = *this;
  for (int i = 0; i < size_; ++i) out.values_[i] = static_cast<std::uint8_t>(size_ + 1 - values_[i]);
  return out;
}

Pattern Pattern::inverse() const {
  Pattern out = *this;
  for (int i = 0; i < size_; ++i) out.values_[values_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return out;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::vector<std::int64_t> xs, ys;
  xs.reserve(points_.size());
  ys.reserve(points_.size());
  for (const auto& p : points_) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
      std::adjacent_find(ys.begin(), ys.end()) != ys.end()) {
    throw std::invalid_argument("point set has a repeated x or y coordinate");
  }
}

int Shape::operator[](Region r) const {
  switch (r) {
    case Region::kTopLeft: return tl;
    case Region::kTopRight: return tr;
    case Region::kBottomLeft: return bl;
    case Region::kBottomRight: return br;
  }
  return 0;
}

bool Shape::proper() const {
  return tl + tr >= 1 && bl + br >= 1 && tl + bl >= 1 && tr + br >= 1;
}

std::string Shape::to_string() const {
  return std::to_string(tl) + std::to_string(tr) + std::to_string(bl) + std::to_string(br);
}

std::span<const Shape> all_shapes() {
  static const std::vector<Shape> shapes = [] {
    std::vector<Shape> out;
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b)
        for (int c = 0; a + b + c <= 4; ++c) out.push_back({a, b, c, 4 - a - b - c});
    return out;
  }();
  return shapes;
}

Permutation parse_permutation(std::istream& in) {
  std::vector<std::int32_t> values;
  std::string token;
  std::size_t position = 0;
  while (in >> token) {
    ++position;
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(ParseError::Kind::kNotAnInteger, position,
                       "token " + std::to_string(position) + " ('" + token + "') is not an integer");
    }
    if (v < 1 || v > std::numeric_limits<std::int32_t>::max()) {
      throw ParseError(ParseError::Kind::kNotABijection, position,
                       "token " + std::to_string(position) + " value " + token + " is out of range");
    }
    values.push_back(static_cast<std::int32_t>(v));
  }
  // Out-of-range and duplicates are only decidable once n is known.
  std::vector<bool> seen(values.size() + 1, false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto v = static_cast<std::size_t>(values[i]);
    if (v > values.size() || seen[v]) {
      throw ParseError(ParseError::Kind::kNotABijection, i + 1,
                       "token " + std::to_string(i + 1) + " value " + std::to_string(v) +
                           (v > values.size() ? " exceeds n = " + std::to_string(values.size())
                                              : " is a duplicate"));
    }
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

Permutation parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_permutation(in);
}

PointSet points_of(const Permutation& perm) {
  std::vector<Point> points;
  points.reserve(perm.size());
  for (std::size_t i = 1; i <= perm.size(); ++i) points.push_back({static_cast<std::int64_t>(i), perm.at(i)});
  return PointSet(std::move(points));
}

PatternClass classify_pattern(const Pattern& p) {
  if (p.size() != 4) throw std::invalid_argument("classify_pattern needs a 4-pattern");
  // Only a 2|2 split of positions and values can give one point per quadrant.
  return forced_shape(p, 2, 2).four_partite() ? PatternClass::kNonTrivial : PatternClass::kTrivial;
}

Shape forced_shape(const Pattern& p, int left, int bottom) {
  Shape s;
  for (int j = 1; j <= p.size(); ++j) {
    const bool is_left = j <= left;
    const bool is_bottom = p.at(j) <= bottom;
    if (is_left && !is_bottom) ++s.tl;
    if (!is_left && !is_bottom) ++s.tr;
    if (is_left && is_bottom) ++s.bl;
    if (!is_left && is_bottom) ++s.br;
  }
  return s;
}

bool pattern_forms_shape(const Pattern& p, const Shape& shape) {
  if (shape.total() != p.size()) return false;
  return forced_shape(p, shape.tl + shape.bl, shape.bl + shape.br) == shape;
}

namespace {

// Calls f(order-type index) for every k-subset of `ys` (already in x order).
template <typename F>
void for_each_subset(std::span<const std::int64_t> ys, int k, F&& f) {
  const int n = static_cast<int>(ys.size());
  if (n < k) return;
  std::array<int, 4> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::array<std::int64_t, 4> vals{};
  while (true) {
    for (int i = 0; i < k; ++i) vals[i] = ys[idx[i]];
    f(order_type_index(vals, k));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::int64_t> ys_in_x_order(const PointSet& ps) {
  std::vector<Point> pts(ps.points().begin(), ps.points().end());
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  std::vector<std::int64_t> ys;
  ys.reserve(pts.size());
  for (const auto& p : pts) ys.push_back(p.y);
  return ys;
}

}  // namespace

Count brute_count_pattern(const PointSet& ps, const Pattern& p) {
  const auto ys = ys_in_x_order(ps);
  const int target = p.index();
  Count total = 0;
  for_each_subset(ys, p.size(), [&](int idx) {
    if (idx == target) ++total;
  });
  return total;
}

Count brute_count_pattern(const Permutation& perm, const Pattern& p) {
  return brute_count_pattern(points_of(perm), p);
}

std::array<Count, 24> brute_profile4(const Permutation& perm) {
  std::vector<std::int64_t> ys(perm.values().begin(), perm.values().end());
  std::array<std::uint64_t, 24> tally{};
  for_each_subset(ys, 4, [&](int idx) { ++tally[idx]; });
  std::array<Count, 24> out{};
  for (int i = 0; i < 24; ++i) out[i] = tally[i];
  return out;
}

Shape shape_of(std::span<const Point> quadruple, const PlaneDivision& div) {
  Shape s;
  for (const auto& p : quadruple) {
    if (div.on_line(p)) throw std::invalid_argument("point lies on a dividing line");
    const bool l = div.left(p);
    const bool b = div.bottom(p);
    if (l && !b) ++s.tl;
    if (!l && !b) ++s.tr;
    if (l && b) ++s.bl;
    if (!l && b) ++s.br;
  }
  return s;
}

}  // namespace perm4
