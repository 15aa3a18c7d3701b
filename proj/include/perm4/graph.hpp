#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "perm4/count.hpp"

namespace perm4 {

using NodeId = std::uint32_t;

/// Simple undirected graph: no self-loops, no repeated edges.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Throws std::invalid_argument when the edge list is not simple or names a
  /// node outside [0, node_count).
  UndirectedGraph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges);

  NodeId node_count() const { return node_count_; }
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }
  std::vector<std::vector<NodeId>> adjacency() const;
  /// The subgraph induced by `keep` (node ids are preserved).
  UndirectedGraph induced(const std::vector<bool>& keep) const;

 private:
  NodeId node_count_ = 0;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Simple directed graph: no self-loops, no repeated arcs (u->v and v->u may
/// both be present).
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> arcs);

  NodeId node_count() const { return node_count_; }
  const std::vector<std::pair<NodeId, NodeId>>& arcs() const { return arcs_; }

 private:
  NodeId node_count_ = 0;
  std::vector<std::pair<NodeId, NodeId>> arcs_;
};

/// Directed 4-partite multigraph whose edges run only from layer i to layer
/// (i+1) mod 4. Node ids are local to their layer.
class LayeredMultigraph {
 public:
  struct Edge {
    int layer = 0;  // source layer; the target lies in (layer + 1) % 4
    NodeId from = 0;
    NodeId to = 0;
    std::uint64_t mult = 1;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  LayeredMultigraph() = default;
  /// Throws std::invalid_argument on an out-of-layer endpoint, a zero
  /// multiplicity or a repeated (layer, from, to) triple.
  LayeredMultigraph(std::array<NodeId, 4> layer_sizes, std::vector<Edge> edges);

  const std::array<NodeId, 4>& layer_sizes() const { return layer_sizes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint64_t max_multiplicity() const;
  bool simple() const { return max_multiplicity() <= 1; }

 private:
  std::array<NodeId, 4> layer_sizes_{};
  std::vector<Edge> edges_;
};

// Counting conventions: an undirected 4-cycle is a 4-node cycle subgraph
// (cyclic node order up to rotation and reflection); a directed or layered
// 4-cycle is a cyclic node sequence up to rotation. Multigraph cycles weigh
// the product of their edge multiplicities.

Count brute_count_c4(const UndirectedGraph& g);
Count brute_count_c4(const DirectedGraph& g);
Count brute_count_c4(const LayeredMultigraph& g);

/// Degree-ordered wedge counting: each cycle is found once from its
/// highest-ranked node. O(m^1.5) time, O(n) extra memory.
Count count_c4_undirected(const UndirectedGraph& g);

/// Sum over unordered node pairs of C(codeg, 2); equals twice the 4-cycle
/// count.
Count codegree_pair_sum(const UndirectedGraph& g);

/// Weighted 4-cycle count of a layered multigraph with the same
/// degree-ordered wedge scheme: O(m^1.5).
Count count_c4_layered(const LayeredMultigraph& g);

/// Sum over (v0, v2) of W02(v0, v2) * W20(v2, v0), where W are the
/// multiplicity-weighted 2-paths through layers 1 and 3. Cost is the number
/// of such 2-paths, which can be quadratic; a cross-check for the above.
Count count_c4_layered_by_paths(const LayeredMultigraph& g);

}  // namespace perm4
