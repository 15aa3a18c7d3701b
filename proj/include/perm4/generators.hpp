#pragma once

#include <array>
#include <cstdint>

#include "perm4/graph.hpp"
#include "perm4/instance.hpp"
#include "perm4/permutation.hpp"

namespace perm4 {

/// SplitMix64: state advances by 0x9E3779B97F4A7C15, output is the state
/// passed through the usual two xor-shift-multiply rounds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// floor(next() * bound / 2^64); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Edge probability num/den.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  bool draw(SplitMix64& rng) const { return rng.below(den) < num; }
};

/// Fisher-Yates from the identity: for i = n-1 down to 1 swap slot i with
/// slot below(i + 1).
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// G(n, p): pairs (u, v), u < v, in lexicographic order, one draw each.
UndirectedGraph random_graph(NodeId n, Probability p, std::uint64_t seed);

/// Arcs (u, v), u != v, in lexicographic order, one draw each.
DirectedGraph random_digraph(NodeId n, Probability p, std::uint64_t seed);

/// Every possible edge (layer, from, to) in lexicographic order gets one
/// draw; kept edges then draw a multiplicity 1 + below(max_mult).
LayeredMultigraph random_layered(std::array<NodeId, 4> sizes, Probability p, std::uint64_t max_mult,
                                 std::uint64_t seed);

/// A random rank-space instance of s points with uniformly drawn cx, cy.
DividedInstance random_instance(std::uint32_t s, std::uint64_t seed);

}  // namespace perm4
