#include "perm4/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace perm4 {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below() needs a positive bound");
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
}

namespace {

std::vector<std::int32_t> shuffled_identity(std::size_t n, SplitMix64& rng) {
  std::vector<std::int32_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = n; i-- > 1;) std::swap(v[i], v[rng.below(i + 1)]);
  return v;
}

}  // namespace

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return Permutation(shuffled_identity(n, rng));
}

UndirectedGraph random_graph(NodeId n, Probability p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (p.draw(rng)) edges.emplace_back(u, v);
  return UndirectedGraph(n, std::move(edges));
}

DirectedGraph random_digraph(NodeId n, Probability p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && p.draw(rng)) arcs.emplace_back(u, v);
  return DirectedGraph(n, std::move(arcs));
}

LayeredMultigraph random_layered(std::array<NodeId, 4> sizes, Probability p, std::uint64_t max_mult,
                                 std::uint64_t seed) {
  if (max_mult == 0) throw std::invalid_argument("max_mult must be positive");
  SplitMix64 rng(seed);
  std::vector<LayeredMultigraph::Edge> edges;
  for (int layer = 0; layer < 4; ++layer)
    for (NodeId u = 0; u < sizes[layer]; ++u)
      for (NodeId v = 0; v < sizes[(layer + 1) % 4]; ++v)
        if (p.draw(rng)) edges.push_back({layer, u, v, 0});
  for (auto& e : edges) e.mult = 1 + rng.below(max_mult);
  return LayeredMultigraph(sizes, std::move(edges));
}

DividedInstance random_instance(std::uint32_t s, std::uint64_t seed) {
  SplitMix64 rng(seed);
  DividedInstance inst;
  for (auto v : shuffled_identity(s, rng)) inst.y.push_back(static_cast<std::uint32_t>(v - 1));
  inst.cx = static_cast<std::uint32_t>(rng.below(s + 1));
  inst.cy = static_cast<std::uint32_t>(rng.below(s + 1));
  return inst;
}

}  // namespace perm4
