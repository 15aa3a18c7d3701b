#include "perm4/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace perm4 {
namespace {

void check_simple(NodeId n, std::vector<std::pair<NodeId, NodeId>> pairs, bool directed) {
  for (auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint outside the node range");
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    if (!directed && u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  const auto dup = std::adjacent_find(pairs.begin(), pairs.end());
  if (dup != pairs.end()) {
    throw std::invalid_argument("repeated edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));
  }
}

Count choose2(Count v) { return v < 2 ? 0 : v * (v - 1) / 2; }

// Nodes ordered by (degree, id); rank[v] is the position in that order.
std::vector<std::uint32_t> degree_ranks(const std::vector<std::size_t>& degree) {
  std::vector<std::uint32_t> order(degree.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return degree[a] != degree[b] ? degree[a] < degree[b] : a < b;
  });
  std::vector<std::uint32_t> rank(degree.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  return rank;
}

}  // namespace

UndirectedGraph::UndirectedGraph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  check_simple(node_count_, edges_, false);
}

std::vector<std::vector<NodeId>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<NodeId>> adj(node_count_);
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

UndirectedGraph UndirectedGraph::induced(const std::vector<bool>& keep) const {
  std::vector<std::pair<NodeId, NodeId>> kept;
  for (const auto& e : edges_)
    if (keep[e.first] && keep[e.second]) kept.push_back(e);
  return UndirectedGraph(node_count_, std::move(kept));
}

DirectedGraph::DirectedGraph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  check_simple(node_count_, arcs_, true);
}

LayeredMultigraph::LayeredMultigraph(std::array<NodeId, 4> layer_sizes, std::vector<Edge> edges)
    : layer_sizes_(layer_sizes), edges_(std::move(edges)) {
  auto key = [](const Edge& e) { return std::make_tuple(e.layer, e.from, e.to); };
  bool increasing = true;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.layer < 0 || e.layer > 3) throw std::invalid_argument("edge layer must be 0..3");
    if (e.from >= layer_sizes_[e.layer] || e.to >= layer_sizes_[(e.layer + 1) % 4]) {
      throw std::invalid_argument("edge endpoint outside its layer");
    }
    if (e.mult == 0) throw std::invalid_argument("edge multiplicity must be positive");
    if (i > 0 && !(key(edges_[i - 1]) < key(e))) increasing = false;
  }
  if (increasing) return;
  std::vector<std::tuple<int, NodeId, NodeId>> keys;
  keys.reserve(edges_.size());
  for (const auto& e : edges_) keys.push_back(key(e));
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("repeated layered edge; accumulate multiplicities instead");
  }
}

std::uint64_t LayeredMultigraph::max_multiplicity() const {
  std::uint64_t m = 0;
  for (const auto& e : edges_) m = std::max(m, e.mult);
  return m;
}

Count brute_count_c4(const UndirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  auto cycle = [&](NodeId a, NodeId b, NodeId c, NodeId d) { return adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a]; };
  Count total = 0;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c)
        for (NodeId d = c + 1; d < n; ++d) {
          // The three distinct cyclic orders of {a, b, c, d}.
          total += cycle(a, b, c, d) + cycle(a, b, d, c) + cycle(a, c, b, d);
        }
  return total;
}

Count brute_count_c4(const DirectedGraph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.arcs()) arc[u][v] = true;
  Count total = 0;
  // Anchor each cyclic sequence at its smallest node.
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      if (!arc[a][b]) continue;
      for (NodeId c = a + 1; c < n; ++c) {
        if (c == b || !arc[b][c]) continue;
        for (NodeId d = a + 1; d < n; ++d) {
          if (d == b || d == c) continue;
          if (arc[c][d] && arc[d][a]) ++total;
        }
      }
    }
  return total;
}

Count brute_count_c4(const LayeredMultigraph& g) {
  const auto& sz = g.layer_sizes();
  std::array<std::vector<std::uint64_t>, 4> mult;
  for (int i = 0; i < 4; ++i) mult[i].assign(std::size_t{sz[i]} * sz[(i + 1) % 4], 0);
  for (const auto& e : g.edges()) mult[e.layer][std::size_t{e.from} * sz[(e.layer + 1) % 4] + e.to] = e.mult;
  auto m = [&](int layer, NodeId u, NodeId v) { return mult[layer][std::size_t{u} * sz[(layer + 1) % 4] + v]; };
  Count total = 0;
  for (NodeId a = 0; a < sz[0]; ++a)
    for (NodeId b = 0; b < sz[1]; ++b) {
      const auto ab = m(0, a, b);
      if (ab == 0) continue;
      for (NodeId c = 0; c < sz[2]; ++c) {
        const auto bc = m(1, b, c);
        if (bc == 0) continue;
        for (NodeId d = 0; d < sz[3]; ++d) {
          const auto cd = m(2, c, d);
          const auto da = m(3, d, a);
          if (cd != 0 && da != 0) total += Count{ab} * bc * cd * da;
        }
      }
    }
  return total;
}

Count count_c4_undirected(const UndirectedGraph& g) {
  const NodeId n = g.node_count();
  auto adj = g.adjacency();
  std::vector<std::size_t> degree(n);
  for (NodeId v = 0; v < n; ++v) degree[v] = adj[v].size();
  const auto rank = degree_ranks(degree);
  for (auto& list : adj) std::sort(list.begin(), list.end(), [&](auto a, auto b) { return rank[a] < rank[b]; });

  std::vector<std::uint64_t> wedges(n, 0);
  std::vector<NodeId> touched;
  Count total = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (rank[v] >= rank[u]) break;
      for (NodeId w : adj[v]) {
        if (rank[w] >= rank[u]) break;
        if (wedges[w]++ == 0) touched.push_back(w);
      }
    }
    for (NodeId w : touched) {
      total += choose2(wedges[w]);
      wedges[w] = 0;
    }
    touched.clear();
  }
  return total;
}

Count codegree_pair_sum(const UndirectedGraph& g) {
  const NodeId n = g.node_count();
  const auto adj = g.adjacency();
  std::vector<std::uint64_t> codeg(n, 0);
  std::vector<NodeId> touched;
  Count total = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u])
      for (NodeId w : adj[v]) {
        if (w <= u) continue;
        if (codeg[w]++ == 0) touched.push_back(w);
      }
    for (NodeId w : touched) {
      total += choose2(codeg[w]);
      codeg[w] = 0;
    }
    touched.clear();
  }
  return total;
}

namespace {

struct LayeredArc {
  std::uint32_t node;
  std::uint64_t mult;
};

// For the top-ranked node u of a cycle u -> v -> w -> v' -> u, the opposite
// node w collects forward 2-paths u -> v -> w and backward ones w -> v' -> u.
// Layers keep all four nodes distinct. Acc must hold one node's 2-path sums.
template <typename Acc>
Count layered_wedges(std::uint32_t n, const std::vector<std::uint32_t>& rank, const std::vector<std::uint32_t>& out_start,
                     const std::vector<LayeredArc>& out_arcs, const std::vector<std::uint32_t>& in_start,
                     const std::vector<LayeredArc>& in_arcs) {
  thread_local std::vector<Acc> forward, backward;
  thread_local std::vector<std::uint32_t> touched;
  forward.assign(n, 0);
  backward.assign(n, 0);
  touched.clear();
  Count total = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    const auto ru = rank[u];
    for (std::uint32_t k = out_start[u]; k < out_start[u + 1]; ++k) {
      const auto [v, m1] = out_arcs[k];
      if (rank[v] >= ru) break;
      for (std::uint32_t l = out_start[v]; l < out_start[v + 1]; ++l) {
        const auto [w, m2] = out_arcs[l];
        if (rank[w] >= ru) break;
        if (forward[w] == 0) touched.push_back(w);
        forward[w] += Acc{m1} * m2;
      }
    }
    if (touched.empty()) continue;
    for (std::uint32_t k = in_start[u]; k < in_start[u + 1]; ++k) {
      const auto [v, m1] = in_arcs[k];
      if (rank[v] >= ru) break;
      for (std::uint32_t l = in_start[v]; l < in_start[v + 1]; ++l) {
        const auto [w, m2] = in_arcs[l];
        if (rank[w] >= ru) break;
        if (forward[w] != 0) backward[w] += Acc{m1} * m2;
      }
    }
    for (auto w : touched) {
      total += Count{forward[w]} * backward[w];
      forward[w] = 0;
      backward[w] = 0;
    }
    touched.clear();
  }
  return total;
}

}  // namespace

Count count_c4_layered(const LayeredMultigraph& g) {
  const auto& sz = g.layer_sizes();
  std::array<std::uint32_t, 5> offset{};
  for (int i = 0; i < 4; ++i) offset[i + 1] = offset[i] + sz[i];
  const std::uint32_t n = offset[4];
  const std::size_t m = g.edges().size();

  using Arc = LayeredArc;
  // Flat adjacency: out-arcs and in-arcs of each node, ordered by neighbour
  // rank (lowest first).
  thread_local std::vector<std::uint32_t> out_start, in_start, fill_out, fill_in, rank;
  thread_local std::vector<std::uint64_t> order;
  thread_local std::vector<Arc> out_arcs, in_arcs;
  out_start.assign(n + 1, 0);
  in_start.assign(n + 1, 0);
  for (const auto& e : g.edges()) {
    ++out_start[offset[e.layer] + e.from + 1];
    ++in_start[offset[(e.layer + 1) % 4] + e.to + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) {
    out_start[v + 1] += out_start[v];
    in_start[v + 1] += in_start[v];
  }
  order.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint64_t degree = (out_start[v + 1] - out_start[v]) + (in_start[v + 1] - in_start[v]);
    order[v] = degree << 32 | v;
  }
  std::sort(order.begin(), order.end());
  rank.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) rank[order[i] & 0xffffffffu] = i;

  // Unordered arcs first, then re-emitted in rank order of the far end.
  thread_local std::vector<Arc> raw_out;
  raw_out.resize(m);
  fill_out.assign(out_start.begin(), out_start.end() - 1);
  for (const auto& e : g.edges()) {
    const std::uint32_t u = offset[e.layer] + e.from;
    raw_out[fill_out[u]++] = {offset[(e.layer + 1) % 4] + e.to, e.mult};
  }
  out_arcs.resize(m);
  in_arcs.resize(m);
  fill_out.assign(out_start.begin(), out_start.end() - 1);
  fill_in.assign(in_start.begin(), in_start.end() - 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::uint32_t>(order[i] & 0xffffffffu);
    for (std::uint32_t k = out_start[u]; k < out_start[u + 1]; ++k) {
      const auto [v, mult] = raw_out[k];
      in_arcs[fill_in[v]++] = {u, mult};
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto v = static_cast<std::uint32_t>(order[i] & 0xffffffffu);
    for (std::uint32_t k = in_start[v]; k < in_start[v + 1]; ++k) {
      const auto [u, mult] = in_arcs[k];
      out_arcs[fill_out[u]++] = {v, mult};
    }
  }

  // Each 2-path weight is at most the product of two layer multiplicity sums.
  std::array<Count, 4> layer_weight{};
  for (const auto& e : g.edges()) layer_weight[e.layer] += e.mult;
  const Count heaviest = *std::max_element(layer_weight.begin(), layer_weight.end());
  if (heaviest < (Count{1} << 32)) return layered_wedges<std::uint64_t>(n, rank, out_start, out_arcs, in_start, in_arcs);
  return layered_wedges<Count>(n, rank, out_start, out_arcs, in_start, in_arcs);
}

Count count_c4_layered_by_paths(const LayeredMultigraph& g) {
  const auto& sz = g.layer_sizes();
  std::array<std::vector<std::vector<std::pair<NodeId, std::uint64_t>>>, 4> out, in;
  for (int i = 0; i < 4; ++i) {
    out[i].resize(sz[i]);
    in[i].resize(sz[i]);
  }
  for (const auto& e : g.edges()) {
    out[e.layer][e.from].emplace_back(e.to, e.mult);
    in[(e.layer + 1) % 4][e.to].emplace_back(e.from, e.mult);
  }
  // key = v0 * |V2| + v2
  std::unordered_map<std::uint64_t, Count> via1, via3;
  for (NodeId v1 = 0; v1 < sz[1]; ++v1)
    for (const auto& [v0, a] : in[1][v1])
      for (const auto& [v2, b] : out[1][v1]) via1[std::uint64_t{v0} * sz[2] + v2] += Count{a} * b;
  for (NodeId v3 = 0; v3 < sz[3]; ++v3)
    for (const auto& [v2, a] : in[3][v3])
      for (const auto& [v0, b] : out[3][v3]) via3[std::uint64_t{v0} * sz[2] + v2] += Count{a} * b;
  Count total = 0;
  for (const auto& [key, w] : via1) {
    const auto it = via3.find(key);
    if (it != via3.end()) total += w * it->second;
  }
  return total;
}

}  // namespace perm4
