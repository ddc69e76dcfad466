#pragma once

#include <cstdint>

namespace heaplab {

/// Exact count of key comparisons consumed by meld, including comparisons
/// against the empty-side sentinel (the minimum of an empty heap). Size,
/// rank and randomness tests made by bal are not key comparisons; they are
/// tallied separately in `structural` and never mixed into the main count.
struct CostMeter {
  std::uint64_t comparisons = 0;
  std::uint64_t structural = 0;

  void reset() { comparisons = 0; structural = 0; }
};

}  // namespace heaplab
