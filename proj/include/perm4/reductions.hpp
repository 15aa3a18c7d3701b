#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "perm4/count.hpp"
#include "perm4/graph.hpp"
#include "perm4/instance.hpp"
#include "perm4/permutation.hpp"

namespace perm4 {

// Undirected -> directed: every edge becomes both arcs. #C4(g) is half the
// directed count.
DirectedGraph undirected_to_directed(const UndirectedGraph& g);

struct LayeredReduction {
  LayeredMultigraph graph;  // four copies of the node set, unit multiplicities
  Count correction = 0;     // sum over u of 4 C(b(u), 2) + b(u)
};

/// Directed -> 4-circle-layered. #C4(g) = (#C4(graph) - correction) / 4.
LayeredReduction directed_to_layered(const DirectedGraph& g);

struct UndirectedReduction {
  UndirectedGraph graph;              // layer i node u becomes offset[i] + u
  std::array<NodeId, 5> offset{};
  std::array<std::vector<bool>, 4> pair_masks;    // V_i with V_{i+1}
  std::array<std::vector<bool>, 4> triple_masks;  // V_i, V_{i+1}, V_{i+2}
};

/// Layered (unit multiplicities) -> undirected. Throws std::invalid_argument
/// on a multiplicity above 1.
UndirectedReduction layered_to_undirected(const LayeredMultigraph& g);

/// #C4 of the layered graph from undirected counts on the reduction graph
/// and its eight induced subgraphs.
Count layered_count_from_undirected(const UndirectedReduction& r,
                                    const std::function<Count(const UndirectedGraph&)>& counter);

/// The whole chain undirected -> directed -> layered -> undirected, using
/// `counter` on the final undirected graphs.
Count count_c4_via_reductions(const UndirectedGraph& g,
                              const std::function<Count(const UndirectedGraph&)>& counter = count_c4_undirected);

struct SplitInstance {
  std::array<int, 4> bits{};  // p_0..p_3
  Count weight = 1;           // 2^(p_0 + p_1 + p_2 + p_3)
  LayeredMultigraph graph;    // simple
};

/// Lazily materialized binary splitting of a multigraph into
/// (floor(log2 U) + 1)^4 simple graphs.
class MultigraphSplit {
 public:
  explicit MultigraphSplit(const LayeredMultigraph& g);

  std::size_t size() const { return levels_ * levels_ * levels_ * levels_; }
  int levels() const { return levels_; }
  /// Instance with bits (i / L^0 % L, i / L^1 % L, ...).
  SplitInstance instance(std::size_t index) const;

 private:
  const LayeredMultigraph* g_;
  std::size_t levels_;
};

inline MultigraphSplit split_multigraph(const LayeredMultigraph& g) { return MultigraphSplit(g); }

/// Sum of weight * counter(instance) over the split.
Count count_c4_by_splitting(const LayeredMultigraph& g,
                            const std::function<Count(const LayeredMultigraph&)>& counter);

/// Multigraph whose weighted 4-cycle count is the number of 4-partite
/// occurrences of 1324. Layers: 0 top part tree, 1 right, 2 bottom, 3 left.
/// Node ids are heap indices of the part trees (root 1).
LayeredMultigraph pattern_instance_to_multigraph(const DividedInstance& inst);
LayeredMultigraph pattern_instance_to_multigraph(const PointSet& ps, const PlaneDivision& div);

struct SignedPatternInstance {
  PointSet points;
  PlaneDivision division;  // the coordinate axes
  int sign = 1;
  std::uint8_t weak = 0;   // bit Part set: that side's tilt is the non-strict one
};

/// The 16 embeddings of a simple layered graph; the signed sum of their
/// 4-partite 1324 counts is #C4(g). Throws std::invalid_argument on a
/// multiplicity above 1.
std::vector<SignedPatternInstance> layered_to_pattern_instances(const LayeredMultigraph& g);

/// Signed sum over layered_to_pattern_instances with `counter` returning the
/// 4-partite 1324 count of one instance.
SignedCount count_c4_via_patterns(const LayeredMultigraph& g,
                                  const std::function<Count(const PointSet&, const PlaneDivision&)>& counter);

}  // namespace perm4
