#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heaplab {

/// One row of the randomized-bias sweep: per trial, two heaps of n/2 random
/// keys are built by repeated insert under randomized(p), melded once
/// (union columns), then the result loses its minimum (del_min columns).
/// Normalized columns divide by log2 sz of the union result. ci95 is the
/// normal-approximation half-width of the mean of the normalized cost.
struct RandomizedRow {
  double p = 0.0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  double mean_union = 0.0;
  double max_union = 0.0;
  double mean_union_norm = 0.0;
  double ci95_union_norm = 0.0;
  double mean_delmin = 0.0;
  double max_delmin = 0.0;
  double mean_delmin_norm = 0.0;
  double ci95_delmin_norm = 0.0;
};

/// Runs the sweep over the given biases; rows for p = 1/2, 1/phi and 1 are
/// appended when missing. Deterministic given the seed (each (p, trial)
/// pair derives its own streams).
std::vector<RandomizedRow> randomized_sweep(std::vector<double> p_grid, std::uint64_t n,
                                            std::uint64_t trials, std::uint64_t seed);

std::string randomized_csv(const std::vector<RandomizedRow>& rows);

}  // namespace heaplab
