#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "perm4/count.hpp"
#include "perm4/permutation.hpp"

namespace perm4 {

/// Input transform under which occurrence counts are preserved: counting p
/// in pi equals counting apply(p) in apply(pi).
struct SymmetryTransform {
  bool reverse = false;     // reverse positions
  bool complement = false;  // replace value v by n + 1 - v

  Pattern apply(const Pattern& p) const;
  Permutation apply(const Permutation& perm) const;
  friend bool operator==(const SymmetryTransform&, const SymmetryTransform&) = default;
};

struct CanonicalPattern {
  Pattern canonical;  // one of 1, 12, 123, 132
  SymmetryTransform transform;
};

/// Maps a pattern of length <= 3 onto {1, 12, 123, 132}. Throws
/// std::invalid_argument for length 4.
CanonicalPattern symmetry_closure(const Pattern& p);

/// Exact count of a pattern of length 1..3 in O(n log^2 n) with range
/// queries. Throws std::invalid_argument for length 4.
Count count_small_pattern(const Permutation& perm, const Pattern& p);

/// Sum over occurrences of the 2-pattern `p` of w[i] * w[j] (positions i < j,
/// weights indexed by position - 1).
Count count_weighted_pair_pattern(const Permutation& perm, std::span<const std::uint64_t> weights,
                                  const Pattern& p);

/// Counts of every pattern of length 1..3 in a sequence of distinct values.
/// Index 0: "1"; 1..2: 12, 21; 3..8: the six 3-patterns in lexicographic order.
struct SmallProfile {
  std::array<Count, 9> counts{};
  Count operator[](const Pattern& p) const;
};

/// One Fenwick sweep: O(n log n). `ranks` must be a permutation of 0..n-1.
SmallProfile small_profile(std::span<const std::uint32_t> ranks);

}  // namespace perm4
