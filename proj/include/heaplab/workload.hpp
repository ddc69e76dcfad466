#pragma once

#include <cstdint>
#include <string>

#include "heaplab/potentials.hpp"
#include "heaplab/strategy.hpp"

namespace heaplab {

enum class KeyDist { UniformRange, Permutation };

/// A replayable mixed-operation workload over a pool of live heaps.
/// Deterministic given the seed: the op sequence, key stream and (for the
/// randomized strategy) the bal draws are all derived from it.
struct WorkloadSpec {
  StrategyKind strategy = StrategyKind::WeightBiased;
  double p = 0.5;  // randomized bias
  double weight_insert = 1.0;
  double weight_union = 0.0;
  double weight_del_min = 1.0;
  std::uint64_t n_ops = 10'000;
  KeyDist dist = KeyDist::UniformRange;
  Key key_lo = 0;
  Key key_hi = 999'999;
  std::uint64_t seed = 1;

  void check() const;  // throws std::invalid_argument on a bad spec
  Strategy make_strategy() const;
};

struct RunAggregates {
  std::uint64_t ops = 0;
  std::uint64_t bounded_ops = 0;
  std::uint64_t bound_violations = 0;  // slack < -1e-9
  double min_slack = 0.0;              // over bounded ops; 0 when none
  double worst_actual_over_log2_sz = 0.0;
  double mean_amortized = 0.0;
  // Theorem 1 in its stated per-op form, union <= log_phi(sz x + sz y):
  // tracked whenever the ledger bound is the KS-clamped one.
  // Runtime form of the meld induction invariant,
  // amortized <= log_alpha sz(result) + log_beta sz(x) + log_beta sz(y):
  std::uint64_t eq3_checked = 0;
  std::uint64_t eq3_violations = 0;
  double eq3_min_slack = 0.0;
  // |sum(amortized) - sum(actual) - (phi(final pool) - phi(initial pool))|
  double telescoping_error = 0.0;
};

struct RunReport {
  WorkloadSpec spec;
  std::string potential_name;
  Ledger ledger;
  RunAggregates agg;
};

/// Executes the workload and accounts every operation against the given
/// potential. Creation rows (single, insert) carry no bound; union and
/// del_min rows get theirs from bound_for.
RunReport run_workload(const WorkloadSpec& spec, const Potential& pot);

/// Aggregate block as a deterministic JSON object (sorted keys, 12
/// significant digits).
std::string aggregates_json(const RunReport& report);

}  // namespace heaplab
