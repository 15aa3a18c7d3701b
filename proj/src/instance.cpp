#include "perm4/instance.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace perm4 {

Region DividedInstance::region(std::uint32_t x) const {
  const bool l = left(x);
  const bool b = bottom(x);
  if (b) return l ? Region::kBottomLeft : Region::kBottomRight;
  return l ? Region::kTopLeft : Region::kTopRight;
}

Shape DividedInstance::census() const {
  Shape s;
  for (std::uint32_t x = 0; x < size(); ++x) {
    switch (region(x)) {
      case Region::kTopLeft: ++s.tl; break;
      case Region::kTopRight: ++s.tr; break;
      case Region::kBottomLeft: ++s.bl; break;
      case Region::kBottomRight: ++s.br; break;
    }
  }
  return s;
}

DividedInstance DividedInstance::from(const PointSet& ps, const PlaneDivision& div) {
  const auto pts = ps.points();
  const std::size_t n = pts.size();
  std::vector<std::uint32_t> by_x(n), by_y(n);
  std::iota(by_x.begin(), by_x.end(), 0u);
  std::iota(by_y.begin(), by_y.end(), 0u);
  std::sort(by_x.begin(), by_x.end(), [&](auto a, auto b) { return pts[a].x < pts[b].x; });
  std::sort(by_y.begin(), by_y.end(), [&](auto a, auto b) { return pts[a].y < pts[b].y; });
  std::vector<std::uint32_t> yrank(n);
  for (std::uint32_t r = 0; r < n; ++r) yrank[by_y[r]] = r;

  DividedInstance inst;
  inst.y.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) {
    const auto& p = pts[by_x[r]];
    if (div.on_line(p)) throw std::invalid_argument("point lies on a dividing line");
    inst.y[r] = yrank[by_x[r]];
    if (div.left(p)) ++inst.cx;
    if (div.bottom(p)) ++inst.cy;
  }
  return inst;
}

PointSet DividedInstance::point_set() const {
  std::vector<Point> pts;
  pts.reserve(y.size());
  for (std::uint32_t x = 0; x < size(); ++x) pts.push_back({x + 1, y[x] + std::int64_t{1}});
  return PointSet(std::move(pts));
}

PlaneDivision DividedInstance::division() const { return PlaneDivision::between(cx, cy); }

DividedInstance DividedInstance::flipped_x() const {
  DividedInstance out;
  out.y.assign(y.rbegin(), y.rend());
  out.cx = size() - cx;
  out.cy = cy;
  return out;
}

DividedInstance DividedInstance::flipped_y() const {
  DividedInstance out;
  const std::uint32_t s = size();
  out.y.resize(s);
  for (std::uint32_t x = 0; x < s; ++x) out.y[x] = s - 1 - y[x];
  out.cx = cx;
  out.cy = s - cy;
  return out;
}

DividedInstance DividedInstance::transposed() const {
  DividedInstance out;
  out.y.resize(size());
  for (std::uint32_t x = 0; x < size(); ++x) out.y[y[x]] = x;
  out.cx = cy;
  out.cy = cx;
  return out;
}

DividedInstance DividedInstance::with_part_reversed(Part part) const {
  DividedInstance out = *this;
  const std::uint32_t s = size();
  switch (part) {
    case Part::kLeft: std::reverse(out.y.begin(), out.y.begin() + cx); break;
    case Part::kRight: std::reverse(out.y.begin() + cx, out.y.end()); break;
    case Part::kBottom:
      for (auto& v : out.y)
        if (v < cy) v = cy - 1 - v;
      break;
    case Part::kTop:
      for (auto& v : out.y)
        if (v >= cy) v = cy + s - 1 - v;
      break;
  }
  return out;
}

DividedInstance DividedInstance::restricted(std::span<const Region> regions) const {
  std::array<bool, 4> keep{};
  for (auto r : regions) keep[static_cast<int>(r)] = true;
  std::vector<bool> kept_value(size(), false);
  DividedInstance out;
  for (std::uint32_t x = 0; x < size(); ++x) {
    if (!keep[static_cast<int>(region(x))]) continue;
    kept_value[y[x]] = true;
    out.y.push_back(y[x]);
    if (left(x)) ++out.cx;
  }
  std::vector<std::uint32_t> rank(size() + 1, 0);
  for (std::uint32_t v = 0; v < size(); ++v) rank[v + 1] = rank[v] + (kept_value[v] ? 1 : 0);
  for (auto& v : out.y) v = rank[v];
  out.cy = rank[cy];
  return out;
}

DividedInstance Dihedral::apply(const DividedInstance& inst) const {
  DividedInstance out = transpose ? inst.transposed() : inst;
  if (flip_x) out = out.flipped_x();
  if (flip_y) out = out.flipped_y();
  return out;
}

Pattern Dihedral::apply(const Pattern& p) const {
  Pattern out = transpose ? p.inverse() : p;
  if (flip_x) out = out.reversed();
  if (flip_y) out = out.complemented();
  return out;
}

Shape Dihedral::apply(const Shape& s) const {
  Shape out = s;
  if (transpose) std::swap(out.tl, out.br);
  if (flip_x) {
    std::swap(out.tl, out.tr);
    std::swap(out.bl, out.br);
  }
  if (flip_y) {
    std::swap(out.tl, out.bl);
    std::swap(out.tr, out.br);
  }
  return out;
}

std::span<const Dihedral> dihedral_group() {
  static const std::array<Dihedral, 8> kGroup = {
      Dihedral{false, false, false}, Dihedral{false, true, false}, Dihedral{false, false, true},
      Dihedral{false, true, true},   Dihedral{true, false, false}, Dihedral{true, true, false},
      Dihedral{true, false, true},   Dihedral{true, true, true}};
  return kGroup;
}

Pattern reverse_pattern_part(const Pattern& p, Part part, int left, int bottom) {
  const int k = p.size();
  std::array<int, 4> v{};
  for (int j = 1; j <= k; ++j) v[j - 1] = p.at(j);
  switch (part) {
    case Part::kLeft: std::reverse(v.begin(), v.begin() + left); break;
    case Part::kRight: std::reverse(v.begin() + left, v.begin() + k); break;
    case Part::kBottom:
      for (int j = 0; j < k; ++j)
        if (v[j] <= bottom) v[j] = bottom + 1 - v[j];
      break;
    case Part::kTop:
      for (int j = 0; j < k; ++j)
        if (v[j] > bottom) v[j] = bottom + k + 1 - v[j];
      break;
  }
  return Pattern(std::span<const int>(v.data(), static_cast<std::size_t>(k)));
}

}  // namespace perm4
