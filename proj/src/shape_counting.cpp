#include "perm4/shape_counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "perm4/range_counter.hpp"
#include "perm4/small_patterns.hpp"

namespace perm4 {
namespace {

constexpr Shape kEndDoubledCanonical{1, 1, 0, 2};
constexpr Shape kCornerDoubledCanonical{1, 2, 0, 1};

int idx(const char* digits) { return Pattern::from_digits(digits).index(); }

Pattern sub_pattern(const Pattern& p, int first, int last) {
  std::vector<int> vals;
  for (int j = first; j <= last; ++j) vals.push_back(p.at(j));
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  for (auto& v : vals) v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  return Pattern(vals);
}

int small_index(const Pattern& p) {
  if (p.size() == 1) return 0;
  return (p.size() == 2 ? 1 : 3) + p.index();
}

using RegionProfiles = std::array<SmallProfile, 4>;

RegionProfiles region_profiles(const DividedInstance& inst) {
  thread_local std::vector<std::uint32_t> rank, ys;
  const std::uint32_t s = inst.size();
  // Region-local y-ranks, grouped by region in x order.
  std::array<std::uint32_t, 5> start{};
  for (std::uint32_t x = 0; x < s; ++x) ++start[static_cast<int>(inst.region(x)) + 1];
  for (int r = 0; r < 4; ++r) start[r + 1] += start[r];
  rank.resize(s);
  {
    std::array<std::uint32_t, 4> next{};
    // Value v belongs to the region of its point; walk values upward.
    thread_local std::vector<std::uint8_t> region_of_value;
    region_of_value.resize(s);
    for (std::uint32_t x = 0; x < s; ++x) region_of_value[inst.y[x]] = static_cast<std::uint8_t>(inst.region(x));
    for (std::uint32_t v = 0; v < s; ++v) rank[v] = next[region_of_value[v]]++;
  }
  ys.resize(s);
  std::array<std::uint32_t, 4> fill = {start[0], start[1], start[2], start[3]};
  for (std::uint32_t x = 0; x < s; ++x) ys[fill[static_cast<int>(inst.region(x))]++] = rank[inst.y[x]];
  RegionProfiles out;
  for (int r = 0; r < 4; ++r) out[r] = small_profile(std::span<const std::uint32_t>(ys).subspan(start[r], start[r + 1] - start[r]));
  return out;
}

// For a product shape: each compatible pattern with the sub-patterns it
// induces on the left and right occupied regions.
struct ProductPlan {
  Shape shape;
  Region left_region;
  Region right_region;
  std::vector<std::array<int, 3>> entries;  // pattern, left sub-pattern, right sub-pattern
};

ProductPlan make_product_plan(const Shape& shape) {
  ProductPlan plan{shape, Region::kTopLeft, Region::kBottomRight, {}};
  int k = shape.tl;
  if (shape.tl == 0) {
    plan.left_region = Region::kBottomLeft;
    plan.right_region = Region::kTopRight;
    k = shape.bl;
  }
  for (int i = 0; i < 24; ++i) {
    const Pattern p = Pattern::from_index4(i);
    if (!pattern_forms_shape(p, shape)) continue;
    plan.entries.push_back({i, small_index(sub_pattern(p, 1, k)), small_index(sub_pattern(p, k + 1, 4))});
  }
  return plan;
}

void add_product_counts(const ProductPlan& plan, const RegionProfiles& profiles, PatternCounts& out) {
  const auto& a = profiles[static_cast<int>(plan.left_region)].counts;
  const auto& b = profiles[static_cast<int>(plan.right_region)].counts;
  for (const auto& [i, ia, ib] : plan.entries) out[i] += a[ia] * b[ib];
}

// Both orientations of the inner pair of a frame: [0] the pair as in the
// frame, [1] as if the inner part were reversed.
using FrameCounts = std::array<PatternCounts, 2>;

// Canonical 1102: q in TL, p in TR, a pair r1 left of r2 in BR. With r1 above
// r2 the counts land in [0]; with r1 below r2 they land in [1] under the
// index the bottom-reversed frame would give.
template <typename Acc>
FrameCounts end_doubled_counts(const DividedInstance& inst) {
  FrameCounts out{};
  const std::uint32_t s = inst.size(), cx = inst.cx, cy = inst.cy;
  thread_local std::vector<std::uint32_t> inv, br_rank;
  thread_local std::array<std::vector<std::uint64_t>, 4> before;  // rd, lu, ru, ld prefix sums
  thread_local Fenwick<std::uint32_t> fen;

  inv.resize(s);
  br_rank.resize(s);
  for (std::uint32_t x = 0; x < s; ++x) inv[inst.y[x]] = x;
  std::uint64_t n_br = 0, n_tl = 0;
  for (std::uint32_t v = 0; v < cy; ++v)
    if (inv[v] >= cx) br_rank[inv[v]] = static_cast<std::uint32_t>(n_br++);
  for (std::uint32_t v = cy; v < s; ++v) n_tl += inv[v] < cx ? 1 : 0;
  if (n_br < 2 || n_tl == 0) return out;

  for (auto& b : before) {
    b.resize(s + 1);
    b[0] = 0;
  }
  auto& [rd_before, lu_before, ru_before, ld_before] = before;
  fen.reset(n_br);
  std::uint64_t seen = 0, total21 = 0;
  for (std::uint32_t x = 0; x < s; ++x) {
    std::uint64_t rd = 0, lu = 0, ru = 0, ld = 0;
    if (x >= cx && inst.y[x] < cy) {
      const std::uint32_t r = br_rank[x];
      ld = fen.prefix(r);
      lu = seen - ld;
      rd = r - ld;
      ru = (n_br - 1 - r) - lu;
      fen.add(r, 1);
      ++seen;
      total21 += rd;
    }
    rd_before[x + 1] = rd_before[x] + rd;
    lu_before[x + 1] = lu_before[x] + lu;
    ru_before[x + 1] = ru_before[x] + ru;
    ld_before[x + 1] = ld_before[x] + ld;
  }
  const std::uint64_t total12 = n_br * (n_br - 1) / 2 - total21;

  // [21 or 12][q above p, q below p][p left of pair, between, right of pair]
  Acc cell[2][2][3] = {};
  std::uint64_t tl_seen = 0;
  for (std::uint32_t v = cy; v < s; ++v) {
    const std::uint32_t x = inv[v];
    if (x < cx) {
      ++tl_seen;
      continue;
    }
    const std::uint64_t q_below = tl_seen;
    const std::uint64_t q_above = n_tl - tl_seen;
    const std::uint64_t right21 = rd_before[s] - rd_before[x + 1];
    const std::uint64_t left21 = lu_before[x];
    const std::uint64_t right12 = ru_before[s] - ru_before[x + 1];
    const std::uint64_t left12 = ld_before[x];
    const std::uint64_t pairs[2][3] = {{right21, total21 - right21 - left21, left21},
                                       {right12, total12 - right12 - left12, left12}};
    for (int o = 0; o < 2; ++o)
      for (int j = 0; j < 3; ++j) {
        cell[o][0][j] += Acc{pairs[o][j]} * q_above;
        cell[o][1][j] += Acc{pairs[o][j]} * q_below;
      }
  }
  static const int kIdx[2][3] = {{idx("4321"), idx("4231"), idx("4213")},
                                 {idx("3421"), idx("3241"), idx("3214")}};
  for (int o = 0; o < 2; ++o)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) out[o][kIdx[i][j]] = cell[o][i][j];
  return out;
}

// Canonical 1201: q in TL, a pair a left of b in TR, r in BR. Eight
// placements are counted directly; q and r both between a and b comes from
// the closed-form total. Pairs with a above b land in [0]; pairs with a below
// b land in [1] under the index the top-reversed frame would give.
template <typename Acc>
FrameCounts corner_doubled_counts(const DividedInstance& inst) {
  FrameCounts out{};
  const std::uint32_t s = inst.size(), cx = inst.cx, cy = inst.cy;
  const std::uint32_t top = s - cy;
  thread_local std::vector<std::uint64_t> br_left, ld, lu, ld_cl, lu_cl;
  thread_local std::vector<std::uint32_t> inv;
  thread_local Fenwick<std::uint32_t> cnt;
  thread_local Fenwick<std::uint64_t> wsum;

  // br_left[x]: BR points with x-rank < x; cl(p) = br_left[x of p].
  br_left.resize(s + 1);
  br_left[0] = 0;
  for (std::uint32_t x = 0; x < s; ++x) br_left[x + 1] = br_left[x] + ((x >= cx && inst.y[x] < cy) ? 1 : 0);
  const std::uint64_t n_br = br_left[s];
  inv.resize(s);
  for (std::uint32_t x = 0; x < s; ++x) inv[inst.y[x]] = x;
  std::uint64_t n_tl = 0;
  for (std::uint32_t v = cy; v < s; ++v) n_tl += inv[v] < cx ? 1 : 0;
  const std::uint64_t n_tr = top - n_tl;
  if (n_br == 0 || n_tl == 0 || n_tr < 2) return out;

  // Earlier TR partners below / above each TR point, plain and weighted by cl.
  for (auto* f : {&ld, &lu, &ld_cl, &lu_cl}) f->resize(s);
  cnt.reset(top);
  wsum.reset(top);
  std::uint64_t seen = 0, seen_w = 0;
  for (std::uint32_t x = cx; x < s; ++x) {
    if (inst.y[x] < cy) continue;
    const std::uint32_t v = inst.y[x] - cy;
    const std::uint64_t cl = br_left[x];
    ld[x] = cnt.prefix(v);
    lu[x] = seen - ld[x];
    ld_cl[x] = wsum.prefix(v);
    lu_cl[x] = seen_w - ld_cl[x];
    cnt.add(v, 1);
    wsum.add(v, cl);
    ++seen;
    seen_w += cl;
  }
  const std::uint64_t total_w = seen_w;

  // Sweep upward through the top values. For orientation o and kind k (unit,
  // beta = sum cl(b), alpha = sum cl(a)), run_above counts pairs whose upper
  // element is already passed and run_below pairs whose lower one is. At each
  // q the pairs below both are run_above, the pairs above both total - run_below.
  enum { kUnit, kBeta, kAlpha };
  std::uint64_t run_above[2][3] = {}, run_below[2][3] = {};
  Acc sum_above[2][3] = {}, sum_below[2][3] = {};
  std::uint64_t tr_rank = 0, below_w = 0;
  for (std::uint32_t v = cy; v < s; ++v) {
    const std::uint32_t x = inv[v];
    if (x < cx) {
      for (int o = 0; o < 2; ++o)
        for (int k = 0; k < 3; ++k) {
          sum_above[o][k] += run_above[o][k];
          sum_below[o][k] += run_below[o][k];
        }
      continue;
    }
    const std::uint64_t r = tr_rank++;
    const std::uint64_t cl = br_left[x];
    const std::uint64_t rd = r - ld[x];
    const std::uint64_t ru = (n_tr - 1 - r) - lu[x];
    const std::uint64_t rd_cl = below_w - ld_cl[x];
    const std::uint64_t ru_cl = (total_w - below_w - cl) - lu_cl[x];
    below_w += cl;
    // 21 pairs: upper a (partners rd), lower b (partners lu).
    run_above[0][kUnit] += rd;
    run_above[0][kBeta] += rd_cl;
    run_above[0][kAlpha] += cl * rd;
    run_below[0][kUnit] += lu[x];
    run_below[0][kBeta] += cl * lu[x];
    run_below[0][kAlpha] += lu_cl[x];
    // 12 pairs: upper b (partners ld), lower a (partners ru).
    run_above[1][kUnit] += ld[x];
    run_above[1][kBeta] += cl * ld[x];
    run_above[1][kAlpha] += ld_cl[x];
    run_below[1][kUnit] += ru;
    run_below[1][kBeta] += ru_cl;
    run_below[1][kAlpha] += cl * ru;
  }

  static const int kIdx[3][3] = {{idx("2143"), idx("2413"), idx("2431")},
                                 {idx("4132"), idx("4312"), idx("4321")},
                                 {idx("3142"), idx("3412"), idx("3421")}};
  // Reversing the top part swaps "q below both" with "q above both".
  static const int kMirror[3] = {1, 0, 2};

  for (int o = 0; o < 2; ++o) {
    const std::uint64_t* total = run_above[o];  // every pair has passed
    if (total[kUnit] == 0) continue;
    // Summed over q: pairs above q (q below both), below q, and around q.
    Acc below_q[3], above_q[3], mid[3];
    for (int k = 0; k < 3; ++k) {
      above_q[k] = Acc{n_tl} * total[k] - sum_below[o][k];
      below_q[k] = sum_above[o][k];
      mid[k] = sum_below[o][k] - sum_above[o][k];
    }
    // Cells: q {below both, above both, between} x r {left, between, right}.
    Acc cell[3][3] = {};
    const Acc* side[2] = {above_q, below_q};
    for (int qc = 0; qc < 2; ++qc) {
      cell[qc][0] = side[qc][kAlpha];
      cell[qc][1] = side[qc][kBeta] - side[qc][kAlpha];
      cell[qc][2] = Acc{n_br} * side[qc][kUnit] - side[qc][kBeta];
    }
    cell[2][0] = mid[kAlpha];
    cell[2][2] = Acc{n_br} * mid[kUnit] - mid[kBeta];
    Acc eight = 0;
    for (int qc = 0; qc < 3; ++qc)
      for (int rc = 0; rc < 3; ++rc) eight += cell[qc][rc];
    cell[2][1] = Acc{n_tl} * n_br * total[kUnit] - eight;
    for (int qc = 0; qc < 3; ++qc)
      for (int rc = 0; rc < 3; ++rc) out[o][kIdx[o == 0 ? qc : kMirror[qc]][rc]] = cell[qc][rc];
  }
  return out;
}

const Dihedral& to_canonical(const Shape& shape, const Shape& canonical) {
  for (const auto& g : dihedral_group()) {
    if (g.apply(shape) == canonical) return g;
  }
  throw std::invalid_argument("shape " + shape.to_string() + " is not in the family of " + canonical.to_string());
}

// Position (1-based) of value v in p.
int position_of(const Pattern& p, int v) {
  for (int j = 1; j <= p.size(); ++j)
    if (p.at(j) == v) return j;
  return 0;
}

// For a three-region shape: the symmetry taking it to the canonical member of
// its family and, per compatible pattern, which frame (inner pair 21 as is,
// or after reversing the inner part) holds its count and under what index.
struct OrientedPlan {
  Shape shape;
  bool end_doubled = true;
  Dihedral g;
  std::vector<std::array<int, 3>> entries;  // pattern, 1 if direct frame, index in that frame
};

OrientedPlan make_oriented_plan(const Shape& shape, ShapeFamily family) {
  OrientedPlan plan;
  plan.shape = shape;
  plan.end_doubled = family == ShapeFamily::kEndDoubled;
  const Shape canonical = plan.end_doubled ? kEndDoubledCanonical : kCornerDoubledCanonical;
  plan.g = to_canonical(shape, canonical);
  const Part inner_part = plan.end_doubled ? Part::kBottom : Part::kTop;
  const int left = canonical.tl + canonical.bl;
  const int bottom = canonical.bl + canonical.br;
  for (int i = 0; i < 24; ++i) {
    const Pattern p = Pattern::from_index4(i);
    if (!pattern_forms_shape(p, shape)) continue;
    const Pattern c = plan.g.apply(p);
    bool inner21;
    if (plan.end_doubled) {
      inner21 = position_of(c, 2) < position_of(c, 1);
    } else {
      const int r = position_of(c, 1);
      std::array<int, 2> pair{};
      int k = 0;
      for (int j = 2; j <= 4; ++j)
        if (j != r) pair[k++] = c.at(j);
      inner21 = pair[0] > pair[1];
    }
    if (inner21) {
      plan.entries.push_back({i, 1, c.index()});
    } else {
      plan.entries.push_back({i, 0, reverse_pattern_part(c, inner_part, left, bottom).index()});
    }
  }
  return plan;
}

// out = g(inst), reusing out's storage.
void transform_into(const DividedInstance& inst, const Dihedral& g, DividedInstance& out) {
  const std::uint32_t s = inst.size();
  out.y.resize(s);
  std::uint32_t cx = inst.cx, cy = inst.cy;
  if (g.transpose) std::swap(cx, cy);
  if (g.flip_x) cx = s - cx;
  if (g.flip_y) cy = s - cy;
  out.cx = cx;
  out.cy = cy;
  for (std::uint32_t x = 0; x < s; ++x) {
    std::uint32_t a = x, b = inst.y[x];
    if (g.transpose) std::swap(a, b);
    if (g.flip_x) a = s - 1 - a;
    if (g.flip_y) b = s - 1 - b;
    out.y[a] = b;
  }
}

void add_oriented_counts(const DividedInstance& inst, const OrientedPlan& plan, PatternCounts& out) {
  thread_local DividedInstance frame;
  transform_into(inst, plan.g, frame);
  // Every cell is at most s^4, which fits 64 bits below 2^16 points.
  FrameCounts counts;
  if (frame.size() < (1u << 16)) {
    counts = plan.end_doubled ? end_doubled_counts<std::uint64_t>(frame) : corner_doubled_counts<std::uint64_t>(frame);
  } else {
    counts = plan.end_doubled ? end_doubled_counts<Count>(frame) : corner_doubled_counts<Count>(frame);
  }
  const PatternCounts& direct = counts[0];
  const PatternCounts& reflected = counts[1];
  for (const auto& [i, is_direct, src] : plan.entries) out[i] += is_direct ? direct[src] : reflected[src];
}

struct EasyPlans {
  std::vector<ProductPlan> products;
  std::vector<OrientedPlan> oriented;
};

void check_easy(const Shape& shape, ShapeFamily family) {
  if (family == ShapeFamily::kNonProper || family == ShapeFamily::kFourPartite) {
    throw std::invalid_argument("shape " + shape.to_string() + " is not an easy shape");
  }
}

}  // namespace

ShapeFamily shape_family(const Shape& s) {
  if (s.total() != 4) throw std::invalid_argument("shape must hold 4 points");
  if (!s.proper()) return ShapeFamily::kNonProper;
  if (s.four_partite()) return ShapeFamily::kFourPartite;
  const int occupied = (s.tl > 0) + (s.tr > 0) + (s.bl > 0) + (s.br > 0);
  if (occupied == 2) return ShapeFamily::kProduct;
  // Three regions; the corner is the one diagonal to the empty region.
  int corner;
  if (s.tl == 0) corner = s.br;
  else if (s.tr == 0) corner = s.bl;
  else if (s.bl == 0) corner = s.tr;
  else corner = s.tl;
  return corner == 2 ? ShapeFamily::kCornerDoubled : ShapeFamily::kEndDoubled;
}

std::span<const Shape> easy_shapes() {
  static const std::vector<Shape> shapes = [] {
    std::vector<Shape> out;
    for (const auto& s : all_shapes()) {
      const auto f = shape_family(s);
      if (f != ShapeFamily::kNonProper && f != ShapeFamily::kFourPartite) out.push_back(s);
    }
    return out;
  }();
  return shapes;
}

namespace {

const EasyPlans& easy_plans() {
  static const EasyPlans plans = [] {
    EasyPlans out;
    for (const auto& shape : easy_shapes()) {
      const ShapeFamily family = shape_family(shape);
      if (family == ShapeFamily::kProduct) {
        out.products.push_back(make_product_plan(shape));
      } else {
        out.oriented.push_back(make_oriented_plan(shape, family));
      }
    }
    return out;
  }();
  return plans;
}

bool fits(const Shape& census, const Shape& shape) {
  return census.tl >= shape.tl && census.tr >= shape.tr && census.bl >= shape.bl && census.br >= shape.br;
}

constexpr std::uint32_t kEnumerationLimit = 10;

}  // namespace

PatternCounts count_shape(const DividedInstance& inst, const Shape& shape) {
  check_easy(shape, shape_family(shape));
  PatternCounts out{};
  const auto& plans = easy_plans();
  for (const auto& plan : plans.products)
    if (plan.shape == shape) add_product_counts(plan, region_profiles(inst), out);
  for (const auto& plan : plans.oriented)
    if (plan.shape == shape) add_oriented_counts(inst, plan, out);
  return out;
}

namespace {

// Direct enumeration of 4-subsets; cheaper than the sweeps on tiny instances.
PatternCounts easy_shapes_by_enumeration(const DividedInstance& inst) {
  PatternCounts total{};
  const std::uint32_t s = inst.size(), cx = inst.cx, cy = inst.cy;
  const auto& y = inst.y;
  for (std::uint32_t a = 0; a < s; ++a)
    for (std::uint32_t b = a + 1; b < s; ++b)
      for (std::uint32_t c = b + 1; c < s; ++c)
        for (std::uint32_t d = c + 1; d < s; ++d) {
          const int left = (a < cx) + (b < cx) + (c < cx) + (d < cx);
          const int bottom = (y[a] < cy) + (y[b] < cy) + (y[c] < cy) + (y[d] < cy);
          if (left == 0 || left == 4 || bottom == 0 || bottom == 4) continue;
          if (left == 2 && bottom == 2 && (y[a] < cy) != (y[b] < cy)) continue;
          const int code = ((y[a] > y[b]) + (y[a] > y[c]) + (y[a] > y[d])) * 6 +
                           ((y[b] > y[c]) + (y[b] > y[d])) * 2 + (y[c] > y[d]);
          ++total[code];
        }
  return total;
}

}  // namespace

PatternCounts count_easy_shapes(const DividedInstance& inst) {
  if (inst.size() <= kEnumerationLimit) return easy_shapes_by_enumeration(inst);
  PatternCounts total{};
  const Shape census = inst.census();
  const auto& plans = easy_plans();
  const RegionProfiles profiles = region_profiles(inst);
  for (const auto& plan : plans.products)
    if (fits(census, plan.shape)) add_product_counts(plan, profiles, total);
  for (const auto& plan : plans.oriented)
    if (fits(census, plan.shape)) add_oriented_counts(inst, plan, total);
  return total;
}

namespace {

Count single(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape,
             ShapeFamily expected) {
  if (p.size() != 4) throw std::invalid_argument("shape counting needs a 4-pattern");
  if (shape_family(shape) != expected) {
    throw std::invalid_argument("shape " + shape.to_string() + " does not belong to the requested family");
  }
  return count_shape(DividedInstance::from(ps, div), shape)[p.index()];
}

}  // namespace

Count count_product_shape(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape) {
  return single(ps, div, p, shape, ShapeFamily::kProduct);
}

Count count_shape_1102(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape) {
  return single(ps, div, p, shape, ShapeFamily::kEndDoubled);
}

Count count_shape_1201(const PointSet& ps, const PlaneDivision& div, const Pattern& p, const Shape& shape) {
  return single(ps, div, p, shape, ShapeFamily::kCornerDoubled);
}

Count count_all_easy_shapes(const PointSet& ps, const PlaneDivision& div, const Pattern& p) {
  if (p.size() != 4) throw std::invalid_argument("shape counting needs a 4-pattern");
  return count_easy_shapes(DividedInstance::from(ps, div))[p.index()];
}

std::vector<PatternCounts> brute_shape_counts(const DividedInstance& inst) {
  const auto shapes = all_shapes();
  std::vector<PatternCounts> out(shapes.size(), PatternCounts{});
  const PointSet ps = inst.point_set();
  const PlaneDivision div = inst.division();
  const auto pts = ps.points();
  const std::size_t s = pts.size();
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b)
      for (std::size_t c = b + 1; c < s; ++c)
        for (std::size_t d = c + 1; d < s; ++d) {
          const std::array<Point, 4> quad = {pts[a], pts[b], pts[c], pts[d]};
          const Shape shape = shape_of(quad, div);
          int values[4];
          for (int i = 0; i < 4; ++i) {
            values[i] = 1;
            for (int j = 0; j < 4; ++j) values[i] += quad[j].y < quad[i].y ? 1 : 0;
          }
          const Pattern p{values[0], values[1], values[2], values[3]};
          const auto k = static_cast<std::size_t>(std::find(shapes.begin(), shapes.end(), shape) - shapes.begin());
          ++out[k][p.index()];
        }
  return out;
}

}  // namespace perm4
