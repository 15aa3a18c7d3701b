#include "perm4/profile.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "perm4/graph.hpp"
#include "perm4/reductions.hpp"

namespace perm4 {
namespace {

// normalization_table()[p.index()] for non-trivial p.
const std::array<Normalization, 24>& normalization_table() {
  static const auto table = [] {
    std::array<Normalization, 24> t{};
    const Pattern base = Pattern::from_digits("1324");
    for (int mask = 0; mask < 16; ++mask) {
      Normalization n{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
      Pattern q = base;
      if (n.left) q = reverse_pattern_part(q, Part::kLeft, 2, 2);
      if (n.right) q = reverse_pattern_part(q, Part::kRight, 2, 2);
      if (n.bottom) q = reverse_pattern_part(q, Part::kBottom, 2, 2);
      if (n.top) q = reverse_pattern_part(q, Part::kTop, 2, 2);
      t[q.index()] = n;
    }
    return t;
  }();
  return table;
}

Count gcd(Count a, Count b) {
  while (b != 0) {
    const Count r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint32_t log2_padded(std::size_t n) { return static_cast<std::uint32_t>(std::countr_zero(std::bit_ceil(n))); }

constexpr std::uint32_t kFourPartiteEnumerationLimit = 24;

// 4-partite occurrences of every pattern by trying each TL, BL, TR, BR choice.
std::array<std::uint64_t, 24> four_partite_by_enumeration(const DividedInstance& inst) {
  thread_local std::array<std::vector<std::uint32_t>, 4> by_region;
  for (auto& r : by_region) r.clear();
  for (std::uint32_t x = 0; x < inst.size(); ++x) by_region[static_cast<int>(inst.region(x))].push_back(x);
  const auto& tl = by_region[static_cast<int>(Region::kTopLeft)];
  const auto& tr = by_region[static_cast<int>(Region::kTopRight)];
  const auto& bl = by_region[static_cast<int>(Region::kBottomLeft)];
  const auto& br = by_region[static_cast<int>(Region::kBottomRight)];
  std::array<std::uint64_t, 24> out{};
  for (auto a : tl)
    for (auto b : bl) {
      const std::uint32_t ya = inst.y[std::min(a, b)], yb = inst.y[std::max(a, b)];
      for (auto c : tr)
        for (auto d : br) {
          const std::uint32_t yc = inst.y[std::min(c, d)], yd = inst.y[std::max(c, d)];
          const std::uint32_t ys[4] = {ya, yb, yc, yd};
          int index = 0;
          for (int i = 0; i < 3; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j) smaller += ys[j] < ys[i] ? 1 : 0;
            index = index * (4 - i) + smaller;
          }
          ++out[index];
        }
    }
  return out;
}

// Per-instance work shared by the profile entry points. `nontrivial` lists
// the patterns whose 4-partite term is needed.
PatternCounts accumulate(const Permutation& perm, std::span<const Pattern> nontrivial) {
  PatternCounts total{};
  DividedInstance inst;
  for_each_relevant_pair(perm, 4, [&](const PairView& view) {
    inst.y.assign(view.y.begin(), view.y.end());
    inst.cx = view.cx;
    inst.cy = view.cy;
    const auto easy = count_easy_shapes(inst);
    for (int i = 0; i < 24; ++i) total[i] += easy[i];
    if (nontrivial.empty()) return;
    const Shape census = inst.census();
    if (std::min({census.tl, census.tr, census.bl, census.br}) == 0) return;
    if (inst.size() <= kFourPartiteEnumerationLimit) {
      const auto direct = four_partite_by_enumeration(inst);
      for (const auto& p : nontrivial) total[p.index()] += direct[p.index()];
      return;
    }
    for (const auto& p : nontrivial) total[p.index()] += count_4partite(inst, p);
  });
  return total;
}

std::vector<Pattern> nontrivial_patterns() {
  std::vector<Pattern> out;
  for (int i = 0; i < 24; ++i) {
    const Pattern p = Pattern::from_index4(i);
    if (!is_trivial(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

BaseRange minimal_base_range(std::span<const std::int64_t> coords) {
  if (coords.empty()) throw std::invalid_argument("minimal_base_range needs at least one coordinate");
  const auto [lo, hi] = std::minmax_element(coords.begin(), coords.end());
  const auto a = static_cast<std::uint64_t>(*lo - 1);
  const auto b = static_cast<std::uint64_t>(*hi - 1);
  const int h = std::bit_width(a ^ b);
  const std::int64_t start = static_cast<std::int64_t>((a >> h) << h) + 1;
  return {start, start + (std::int64_t{1} << h) - 1};
}

void for_each_relevant_pair(const Permutation& perm, std::size_t min_points,
                            const std::function<void(const PairView&)>& fn) {
  const std::size_t n = perm.size();
  if (n == 0) return;
  const std::uint32_t levels = log2_padded(n);
  const auto values = perm.values();

  std::vector<std::uint32_t> sorted(n);  // values - 1, sorted inside each block
  for (std::size_t i = 0; i < n; ++i) sorted[i] = static_cast<std::uint32_t>(values[i] - 1);

  std::vector<std::uint32_t> run_of(n), rank_of(n);
  std::vector<std::uint32_t> run_begin, run_fill, run_cx, run_cy;
  std::vector<std::uint32_t> out_pos(n), out_y(n);

  for (std::uint32_t i = 0; i <= levels; ++i) {
    const std::size_t block = std::size_t{1} << i;
    if (i > 0) {
      const std::size_t half = block / 2;
      for (std::size_t start = 0; start + half < n; start += block) {
        const auto first = sorted.begin() + static_cast<std::ptrdiff_t>(start);
        std::inplace_merge(first, first + static_cast<std::ptrdiff_t>(half),
                           sorted.begin() + static_cast<std::ptrdiff_t>(std::min(n, start + block)));
      }
    }

    for (std::size_t start = 0; start < n; start += block) {
      const std::size_t end = std::min(n, start + block);
      if (end - start < min_points) continue;
      const BaseRange rx{static_cast<std::int64_t>(start) + 1, static_cast<std::int64_t>(start + block)};
      const std::size_t mid_x = start + std::max<std::size_t>(block / 2, 1);

      for (std::uint32_t j = 0; j <= levels; ++j) {
        if ((std::size_t{1} << j) < min_points) continue;
        const std::uint32_t half_y = j == 0 ? 1 : (1u << (j - 1));
        // Runs of equal value >> j in the value-sorted block.
        run_begin.clear();
        run_cy.clear();
        for (std::size_t t = start; t < end; ++t) {
          const std::uint32_t v = sorted[t];
          if (t == start || (v >> j) != (sorted[t - 1] >> j)) {
            run_begin.push_back(static_cast<std::uint32_t>(t - start));
            run_cy.push_back(0);
          }
          const auto r = static_cast<std::uint32_t>(run_begin.size() - 1);
          run_of[v] = r;
          rank_of[v] = static_cast<std::uint32_t>(t - start) - run_begin[r];
          if ((v & ((1u << j) - 1)) < half_y) ++run_cy[r];
        }
        const std::size_t runs = run_begin.size();
        run_begin.push_back(static_cast<std::uint32_t>(end - start));
        bool any = false;
        for (std::size_t r = 0; r < runs; ++r) any |= run_begin[r + 1] - run_begin[r] >= min_points;
        if (!any) continue;

        run_fill.assign(run_begin.begin(), run_begin.end() - 1);
        run_cx.assign(runs, 0);
        for (std::size_t p = start; p < end; ++p) {
          const auto v = static_cast<std::uint32_t>(values[p] - 1);
          const std::uint32_t r = run_of[v];
          if (run_begin[r + 1] - run_begin[r] < min_points) continue;
          const std::uint32_t slot = run_fill[r]++;
          out_pos[start + slot] = static_cast<std::uint32_t>(p);
          out_y[start + slot] = rank_of[v];
          if (p < mid_x) ++run_cx[r];
        }
        for (std::size_t r = 0; r < runs; ++r) {
          const std::uint32_t b = run_begin[r], e = run_begin[r + 1];
          if (e - b < min_points) continue;
          const std::int64_t ylo = static_cast<std::int64_t>((sorted[start + b] >> j) << j) + 1;
          PairView view;
          view.rx = rx;
          view.ry = {ylo, ylo + (std::int64_t{1} << j) - 1};
          view.positions = std::span<const std::uint32_t>(out_pos).subspan(start + b, e - b);
          view.y = std::span<const std::uint32_t>(out_y).subspan(start + b, e - b);
          view.cx = run_cx[r];
          view.cy = run_cy[r];
          fn(view);
        }
      }
    }
  }
}

std::vector<RelevantPair> relevant_pairs(const Permutation& perm) {
  std::vector<RelevantPair> out;
  const auto values = perm.values();
  for_each_relevant_pair(perm, 1, [&](const PairView& view) {
    std::vector<Point> pts;
    pts.reserve(view.positions.size());
    for (auto p : view.positions) pts.push_back({std::int64_t{p} + 1, values[p]});
    out.push_back({view.rx, view.ry, PointSet(std::move(pts))});
  });
  return out;
}

Count Profile4::total() const {
  Count sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

Normalization normalization_for(const Pattern& p) {
  if (p.size() != 4 || is_trivial(p)) throw std::invalid_argument("normalization needs a non-trivial 4-pattern");
  return normalization_table()[p.index()];
}

std::pair<PointSet, PlaneDivision> normalize_to_1324(const PointSet& ps, const PlaneDivision& div, const Pattern& p) {
  const Normalization n = normalization_for(p);
  std::vector<Point> pts(ps.points().begin(), ps.points().end());
  // Mirror one part inside its own extent: x -> x1 + x2 - x (or y).
  auto mirror = [&](bool along_x, auto&& member) {
    std::int64_t lo = 0, hi = 0;
    bool seen = false;
    for (const auto& q : pts) {
      if (!member(q)) continue;
      const auto c = along_x ? q.x : q.y;
      lo = seen ? std::min(lo, c) : c;
      hi = seen ? std::max(hi, c) : c;
      seen = true;
    }
    for (auto& q : pts) {
      if (!member(q)) continue;
      auto& c = along_x ? q.x : q.y;
      c = lo + hi - c;
    }
  };
  if (n.left) mirror(true, [&](const Point& q) { return div.left(q); });
  if (n.right) mirror(true, [&](const Point& q) { return !div.left(q); });
  if (n.bottom) mirror(false, [&](const Point& q) { return div.bottom(q); });
  if (n.top) mirror(false, [&](const Point& q) { return !div.bottom(q); });
  return {PointSet(std::move(pts)), div};
}

DividedInstance normalize_to_1324(const DividedInstance& inst, const Pattern& p) {
  const Normalization n = normalization_for(p);
  DividedInstance out = inst;
  if (n.left) out = out.with_part_reversed(Part::kLeft);
  if (n.right) out = out.with_part_reversed(Part::kRight);
  if (n.bottom) out = out.with_part_reversed(Part::kBottom);
  if (n.top) out = out.with_part_reversed(Part::kTop);
  return out;
}

Count count_4partite(const DividedInstance& inst, const Pattern& p) {
  return count_c4_layered(pattern_instance_to_multigraph(normalize_to_1324(inst, p)));
}

Count count_4partite(const PointSet& ps, const PlaneDivision& div, const Pattern& p) {
  return count_4partite(DividedInstance::from(ps, div), p);
}

Count four_partite_by_inclusion_exclusion(const PointSet& ps, const PlaneDivision& div, const Pattern& p,
                                          const PointSetCounter& counter) {
  std::vector<Region> region_of;
  for (const auto& q : ps.points()) {
    if (div.on_line(q)) throw std::invalid_argument("point lies on a dividing line");
    region_of.push_back(div.bottom(q) ? (div.left(q) ? Region::kBottomLeft : Region::kBottomRight)
                                      : (div.left(q) ? Region::kTopLeft : Region::kTopRight));
  }
  SignedCount total = 0;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<Point> kept;
    for (std::size_t i = 0; i < region_of.size(); ++i)
      if ((mask >> static_cast<int>(region_of[i])) & 1) kept.push_back(ps.points()[i]);
    const auto c = static_cast<SignedCount>(counter(PointSet(std::move(kept)), p));
    total += std::popcount(static_cast<unsigned>(mask)) % 2 == 0 ? c : -c;
  }
  if (total < 0) throw std::logic_error("negative 4-partite count");
  return static_cast<Count>(total);
}

Count count_pattern4(const Permutation& perm, const Pattern& p) {
  if (p.size() != 4) throw std::invalid_argument("count_pattern4 needs a 4-pattern");
  std::vector<Pattern> nontrivial;
  if (!is_trivial(p)) nontrivial.push_back(p);
  return accumulate(perm, nontrivial)[p.index()];
}

Profile4 full_profile4(const Permutation& perm) {
  Profile4 out;
  out.counts = accumulate(perm, nontrivial_patterns());
  if (out.total() != binomial(perm.size(), 4)) {
    throw std::logic_error("4-profile does not sum to C(n, 4): " + to_string(out.total()));
  }
  return out;
}

Profile4 trivial_profile4(const Permutation& perm) {
  Profile4 out;
  const auto easy = accumulate(perm, {});
  for (int i = 0; i < 24; ++i)
    if (is_trivial(Pattern::from_index4(i))) out.counts[i] = easy[i];
  return out;
}

Rational tau_star(const Profile4& profile, std::uint64_t n) {
  if (n < 4) throw std::invalid_argument("tau* needs n >= 4");
  Count trivial = 0;
  for (int i = 0; i < 24; ++i)
    if (is_trivial(Pattern::from_index4(i))) trivial += profile.counts[i];
  const Count c = binomial(n, 4);
  // trivial / c - 1/3 = (3 trivial - c) / (3 c)
  const SignedCount num = 3 * static_cast<SignedCount>(trivial) - static_cast<SignedCount>(c);
  const Count den = 3 * c;
  const Count g = gcd(num < 0 ? static_cast<Count>(-num) : static_cast<Count>(num), den);
  return {num / static_cast<SignedCount>(g), den / g};
}

}  // namespace perm4
