#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heaplab/strategy.hpp"
#include "heaplab/tree.hpp"

namespace heaplab {

enum class PotentialKind { Rank, MinorRank, KSClamped, KSUnclamped, STIndicator, Convex };

const char* potential_kind_name(PotentialKind k);

/// A selectable potential function. The KS kinds sum a per-node term
/// phi(t,u) over the tree; Rank and MinorRank read the root caches;
/// Convex is a flat lambda-blend of two simple kinds. Phi(empty) = 0
/// for every kind, and every evaluation is O(1) via the node caches.
class Potential {
 public:
  static Potential rank() { return Potential(PotentialKind::Rank); }
  static Potential minor_rank() { return Potential(PotentialKind::MinorRank); }
  static Potential ks_clamped() { return Potential(PotentialKind::KSClamped); }
  static Potential ks_unclamped() { return Potential(PotentialKind::KSUnclamped); }
  static Potential st_indicator() { return Potential(PotentialKind::STIndicator); }
  /// lambda * a + (1-lambda) * b; components must be simple kinds.
  static Potential convex(double lambda, PotentialKind a, PotentialKind b);

  PotentialKind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  PotentialKind part_a() const { return a_; }
  PotentialKind part_b() const { return b_; }
  std::string name() const;

  double operator()(const Tree& x) const;

 private:
  explicit Potential(PotentialKind k) : kind_(k) {}
  PotentialKind kind_;
  double lambda_ = 1.0;
  PotentialKind a_ = PotentialKind::Rank;
  PotentialKind b_ = PotentialKind::Rank;
};

/// Per-node term phi(t,u) for the summed kinds: KSClamped is
/// max(log_beta(beta*sz(u)/(sz(t)+sz(u))), 0), KSUnclamped drops the max,
/// STIndicator is 1 iff sz(t) < sz(u). Rank/MinorRank/Convex have no
/// node term.
double node_potential(const Tree& t, const Tree& u, PotentialKind kind);

/// Phi(x) under the given kind.
double potential(const Tree& x, PotentialKind kind);
double potential(const Tree& x, const Potential& pot);

/// log_beta(beta*n/(m+n)) <= log_alpha((m+n)/m) for positive m, n.
bool check_ks_inequality(std::uint64_t m, std::uint64_t n, double tol = 1e-12);

struct LedgerEntry {
  std::string op;
  std::uint64_t actual = 0;
  double phi_before = 0.0;
  double phi_after = 0.0;
  double amortized = 0.0;  // actual + phi_after - phi_before
  std::optional<double> bound;
  double slack() const { return bound ? *bound - amortized : 0.0; }
};

/// One amortized-accounting row: phi sums over the heaps consumed and
/// produced by the operation. The bound field is left unset; callers fill
/// it from bound_for when the (op, strategy, potential) triple carries one.
LedgerEntry amortized_step(std::string op, std::uint64_t actual,
                           std::span<const Tree> before, std::span<const Tree> after,
                           const Potential& pot);

inline LedgerEntry amortized_step(std::string op, std::uint64_t actual,
                                  std::initializer_list<Tree> before,
                                  std::initializer_list<Tree> after, const Potential& pot) {
  return amortized_step(std::move(op), actual,
                        std::span<const Tree>(before.begin(), before.size()),
                        std::span<const Tree>(after.begin(), after.size()), pot);
}

/// Per-operation paper bound, when one is proven for the combination:
/// Rank on a leftist flavor (union: log2 sz(result); del_min: 2 log2
/// sz(input)); KSClamped on weight-biased (union: log_phi sz(result);
/// del_min: log_phi sz(input)); a convex(Rank, KSClamped) blend of the two
/// on weight-biased. Everything else has no proven bound.
std::optional<double> bound_for(std::string_view op, StrategyKind strat, const Potential& pot,
                                std::uint64_t sz_input, std::uint64_t sz_result);

/// Fixed-width decimal formatting used by every emitter: 12 significant
/// digits, so identical runs produce byte-identical tables.
std::string format_float(double v);

class Ledger {
 public:
  void append(LedgerEntry e) { entries_.push_back(std::move(e)); }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  double sum_actual() const;
  double sum_amortized() const;  // Kahan-compensated

  /// CSV with the frozen header op,actual,phi_before,phi_after,amortized,bound,slack.
  std::string to_csv() const;
  /// One JSON object per line, same fields.
  std::string to_json_lines() const;

 private:
  std::vector<LedgerEntry> entries_;
};

}  // namespace heaplab
