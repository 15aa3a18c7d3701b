#include "perm4/reductions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace perm4 {
namespace {

void require_simple(const LayeredMultigraph& g) {
  if (!g.simple()) throw std::invalid_argument("layered graph has multiplicities above 1; split it first");
}

std::uint32_t tree_leaves(std::uint32_t size) { return std::bit_ceil(std::max<std::uint32_t>(size, 1)); }

}  // namespace

DirectedGraph undirected_to_directed(const UndirectedGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(2 * g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return DirectedGraph(g.node_count(), std::move(arcs));
}

LayeredReduction directed_to_layered(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<LayeredMultigraph::Edge> edges;
  edges.reserve(4 * g.arcs().size());
  for (int layer = 0; layer < 4; ++layer)
    for (const auto& [u, v] : g.arcs()) edges.push_back({layer, u, v, 1});

  auto arcs = g.arcs();
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::uint64_t> both(n, 0);
  for (const auto& [u, v] : arcs)
    if (std::binary_search(arcs.begin(), arcs.end(), std::make_pair(v, u))) ++both[u];

  LayeredReduction out;
  out.graph = LayeredMultigraph({n, n, n, n}, std::move(edges));
  for (auto b : both) out.correction += 4 * binomial(b, 2) + b;
  return out;
}

UndirectedReduction layered_to_undirected(const LayeredMultigraph& g) {
  require_simple(g);
  UndirectedReduction r;
  const auto& sz = g.layer_sizes();
  for (int i = 0; i < 4; ++i) r.offset[i + 1] = r.offset[i] + sz[i];
  const NodeId n = r.offset[4];

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges()) edges.emplace_back(r.offset[e.layer] + e.from, r.offset[(e.layer + 1) % 4] + e.to);
  r.graph = UndirectedGraph(n, std::move(edges));

  auto mark = [&](std::vector<bool>& mask, int layer) {
    for (NodeId v = r.offset[layer]; v < r.offset[layer + 1]; ++v) mask[v] = true;
  };
  for (int i = 0; i < 4; ++i) {
    r.pair_masks[i].assign(n, false);
    r.triple_masks[i].assign(n, false);
    for (int j = 0; j < 3; ++j) {
      if (j < 2) mark(r.pair_masks[i], (i + j) % 4);
      mark(r.triple_masks[i], (i + j) % 4);
    }
  }
  return r;
}

Count layered_count_from_undirected(const UndirectedReduction& r,
                                    const std::function<Count(const UndirectedGraph&)>& counter) {
  SignedCount total = static_cast<SignedCount>(counter(r.graph));
  for (int i = 0; i < 4; ++i) {
    total += static_cast<SignedCount>(counter(r.graph.induced(r.pair_masks[i])));
    total -= static_cast<SignedCount>(counter(r.graph.induced(r.triple_masks[i])));
  }
  if (total < 0) throw std::logic_error("negative layered 4-cycle count");
  return static_cast<Count>(total);
}

Count count_c4_via_reductions(const UndirectedGraph& g, const std::function<Count(const UndirectedGraph&)>& counter) {
  const auto layered = directed_to_layered(undirected_to_directed(g));
  const Count c_layered = layered_count_from_undirected(layered_to_undirected(layered.graph), counter);
  const Count directed4 = c_layered - layered.correction;
  if (c_layered < layered.correction || directed4 % 8 != 0) {
    throw std::logic_error("reduction chain produced an inconsistent count");
  }
  return directed4 / 8;
}

MultigraphSplit::MultigraphSplit(const LayeredMultigraph& g) : g_(&g) {
  const std::uint64_t u = std::max<std::uint64_t>(g.max_multiplicity(), 1);
  levels_ = static_cast<std::size_t>(std::bit_width(u));
}

SplitInstance MultigraphSplit::instance(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("split instance index");
  SplitInstance out;
  int exponent = 0;
  for (int i = 0; i < 4; ++i) {
    out.bits[i] = static_cast<int>(index % levels_);
    index /= levels_;
    exponent += out.bits[i];
  }
  out.weight = Count{1} << exponent;
  std::vector<LayeredMultigraph::Edge> kept;
  for (const auto& e : g_->edges())
    if ((e.mult >> out.bits[e.layer]) & 1) kept.push_back({e.layer, e.from, e.to, 1});
  out.graph = LayeredMultigraph(g_->layer_sizes(), std::move(kept));
  return out;
}

Count count_c4_by_splitting(const LayeredMultigraph& g, const std::function<Count(const LayeredMultigraph&)>& counter) {
  const MultigraphSplit split(g);
  Count total = 0;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const auto inst = split.instance(i);
    total += inst.weight * counter(inst.graph);
  }
  return total;
}

LayeredMultigraph pattern_instance_to_multigraph(const DividedInstance& inst) {
  const std::uint32_t s = inst.size();
  // Part trees in layer order: top, right, bottom, left.
  const std::array<std::uint32_t, 4> leaves = {tree_leaves(s - inst.cy), tree_leaves(s - inst.cx),
                                               tree_leaves(inst.cy), tree_leaves(inst.cx)};
  thread_local std::array<std::vector<std::uint64_t>, 4> keys;
  for (auto& k : keys) k.clear();

  // Emit (a-ancestor, b-ancestor) for every pair of non-singleton ancestors
  // where coordinate a sits in half `half_a` and b in half `half_b`.
  auto emit = [&](int layer, std::uint32_t a, std::uint32_t half_a, std::uint32_t b, std::uint32_t half_b) {
    const std::uint32_t la = leaves[layer];
    const std::uint32_t lb = leaves[(layer + 1) % 4];
    const int ha_max = std::countr_zero(la);
    const int hb_max = std::countr_zero(lb);
    for (int ha = 1; ha <= ha_max; ++ha) {
      if (((a >> (ha - 1)) & 1) != half_a) continue;
      const std::uint64_t from = (la + a) >> ha;
      for (int hb = 1; hb <= hb_max; ++hb) {
        if (((b >> (hb - 1)) & 1) != half_b) continue;
        keys[layer].push_back(from << 32 | ((lb + b) >> hb));
      }
    }
  };

  for (std::uint32_t x = 0; x < s; ++x) {
    const std::uint32_t y = inst.y[x];
    switch (inst.region(x)) {
      case Region::kTopRight: emit(0, y - inst.cy, 1, x - inst.cx, 1); break;
      case Region::kBottomRight: emit(1, x - inst.cx, 0, y, 1); break;
      case Region::kBottomLeft: emit(2, y, 0, x, 0); break;
      case Region::kTopLeft: emit(3, x, 1, y - inst.cy, 0); break;
    }
  }

  std::vector<LayeredMultigraph::Edge> edges;
  edges.reserve(keys[0].size() + keys[1].size() + keys[2].size() + keys[3].size());
  for (int layer = 0; layer < 4; ++layer) {
    auto& k = keys[layer];
    std::sort(k.begin(), k.end());
    for (std::size_t i = 0; i < k.size();) {
      std::size_t j = i;
      while (j < k.size() && k[j] == k[i]) ++j;
      edges.push_back({layer, static_cast<NodeId>(k[i] >> 32), static_cast<NodeId>(k[i] & 0xffffffffu), j - i});
      i = j;
    }
  }
  return LayeredMultigraph({leaves[0], leaves[1], leaves[2], leaves[3]}, std::move(edges));
}

LayeredMultigraph pattern_instance_to_multigraph(const PointSet& ps, const PlaneDivision& div) {
  return pattern_instance_to_multigraph(DividedInstance::from(ps, div));
}

std::vector<SignedPatternInstance> layered_to_pattern_instances(const LayeredMultigraph& g) {
  require_simple(g);
  const auto& sz = g.layer_sizes();
  const std::int64_t n = std::max<std::int64_t>(*std::max_element(sz.begin(), sz.end()), 1);
  const std::int64_t scale = 10 * n;
  const std::int64_t tilt = 2 * n + 1;

  std::vector<SignedPatternInstance> out;
  out.reserve(16);
  for (std::uint8_t weak = 0; weak < 16; ++weak) {
    auto delta = [&](Part side) { return ((weak >> static_cast<int>(side)) & 1) ? tilt : -tilt; };
    std::vector<Point> pts;
    pts.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
      const auto from = static_cast<std::int64_t>(e.from) + 1;
      const auto to = static_cast<std::int64_t>(e.to) + 1;
      // Layers sit on half-axes: V0 negative x, V1 positive y, V2 positive x,
      // V3 negative y.
      std::int64_t x = 0, y = 0, shift_x = 0, shift_y = 0;
      switch (e.layer) {
        case 0: x = -from, y = to, shift_x = delta(Part::kLeft); break;      // top-left
        case 1: x = to, y = from, shift_y = delta(Part::kTop); break;        // top-right
        case 2: x = from, y = -to, shift_x = -delta(Part::kRight); break;    // bottom-right
        case 3: x = -to, y = -from, shift_y = -delta(Part::kBottom); break;  // bottom-left
      }
      pts.push_back({scale * x + y + shift_x, scale * y + x + shift_y});
    }
    SignedPatternInstance inst;
    inst.points = PointSet(std::move(pts));
    inst.division = PlaneDivision::from_doubled(0, 0);
    inst.sign = (std::popcount(weak) % 2 == 0) ? 1 : -1;
    inst.weak = weak;
    out.push_back(std::move(inst));
  }
  return out;
}

SignedCount count_c4_via_patterns(const LayeredMultigraph& g,
                                  const std::function<Count(const PointSet&, const PlaneDivision&)>& counter) {
  SignedCount total = 0;
  for (const auto& inst : layered_to_pattern_instances(g)) {
    const auto c = static_cast<SignedCount>(counter(inst.points, inst.division));
    total += inst.sign > 0 ? c : -c;
  }
  return total;
}

}  // namespace perm4
