#pragma once

#include <cstdint>

#include "heaplab/rng.hpp"
#include "heaplab/strategy.hpp"
#include "heaplab/tree.hpp"

namespace heaplab {

/// A random heap of exactly n nodes that satisfies the structural invariant
/// of the given strategy: heap property always, plus the weight or rank
/// leftist condition for those flavors. Keys drawn uniformly from
/// [key_lo, key_hi] (duplicates allowed).
Tree random_heap(StrategyKind kind, std::uint64_t n, SplitMix64& rng, Key key_lo = 0,
                 Key key_hi = 999);

/// Size drawn log-uniformly in [1, cap]: small heaps are common, the cap is
/// still exercised.
std::uint64_t log_uniform_size(SplitMix64& rng, std::uint64_t cap);

}  // namespace heaplab
