#pragma once

#include <cstdint>
#include <stdexcept>

#include "heaplab/rng.hpp"

namespace heaplab {

enum class StrategyKind { Skew, WeightBiased, RankBiased, Randomized };

/// Tie handling in the leftist bal rules. The kernel swaps on equal weight
/// or rank; KeepOnTie exists only as the negative control for the
/// reachability round-trip tests.
enum class TieBreak { SwapOnTie, KeepOnTie };

/// Which balancing rule governs meld. Randomized carries its own draw
/// stream: (seed, draw counter) fully determines a run.
class Strategy {
 public:
  static Strategy skew() { return Strategy(StrategyKind::Skew, TieBreak::SwapOnTie, 0.0, 0); }
  static Strategy weight_biased(TieBreak tb = TieBreak::SwapOnTie) {
    return Strategy(StrategyKind::WeightBiased, tb, 0.0, 0);
  }
  static Strategy rank_biased(TieBreak tb = TieBreak::SwapOnTie) {
    return Strategy(StrategyKind::RankBiased, tb, 0.0, 0);
  }
  static Strategy randomized(double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("randomized bias p must be in [0,1]");
    return Strategy(StrategyKind::Randomized, TieBreak::SwapOnTie, p, seed);
  }

  StrategyKind kind() const { return kind_; }
  TieBreak tie_break() const { return tie_; }
  double p() const { return p_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return draws_; }

  /// Next randomized draw in [0,1); advances the counter.
  double next_draw() {
    ++draws_;
    return gen_.next_double();
  }

 private:
  Strategy(StrategyKind k, TieBreak tb, double p, std::uint64_t seed)
      : kind_(k), tie_(tb), p_(p), seed_(seed), gen_(seed) {}

  StrategyKind kind_;
  TieBreak tie_;
  double p_;
  std::uint64_t seed_;
  SplitMix64 gen_;
  std::uint64_t draws_ = 0;
};

const char* strategy_name(StrategyKind k);

}  // namespace heaplab
