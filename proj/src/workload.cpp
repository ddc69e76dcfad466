#include "heaplab/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "heaplab/constants.hpp"
#include "heaplab/heap.hpp"

namespace heaplab {

void WorkloadSpec::check() const {
  if (weight_insert < 0 || weight_union < 0 || weight_del_min < 0)
    throw std::invalid_argument("op weights must be nonnegative");
  if (weight_insert + weight_union + weight_del_min <= 0)
    throw std::invalid_argument("op weights must not all be zero");
  if (strategy == StrategyKind::Randomized && !(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("randomized bias p must be in [0,1]");
  if (key_lo > key_hi) throw std::invalid_argument("empty key range");
}

Strategy WorkloadSpec::make_strategy() const {
  switch (strategy) {
    case StrategyKind::Skew: return Strategy::skew();
    case StrategyKind::WeightBiased: return Strategy::weight_biased();
    case StrategyKind::RankBiased: return Strategy::rank_biased();
    case StrategyKind::Randomized: return Strategy::randomized(p, seed ^ 0xA3C59AC2ED1890E5ULL);
  }
  throw std::invalid_argument("unknown strategy");
}

namespace {

constexpr double kSlackTol = 1e-9;

class KeyStream {
 public:
  KeyStream(const WorkloadSpec& spec, SplitMix64 rng) : spec_(spec), rng_(rng) {
    if (spec.dist == KeyDist::Permutation) {
      perm_.resize(spec.n_ops);
      std::iota(perm_.begin(), perm_.end(), Key{0});
      for (std::size_t i = perm_.size(); i > 1; --i)
        std::swap(perm_[i - 1], perm_[rng_.next_below(i)]);
    }
  }

  Key next() {
    if (spec_.dist == KeyDist::UniformRange)
      return rng_.next_in_range(spec_.key_lo, spec_.key_hi);
    if (perm_.empty()) return 0;
    return perm_[idx_++ % perm_.size()];
  }

 private:
  const WorkloadSpec& spec_;
  SplitMix64 rng_;
  std::vector<Key> perm_;
  std::size_t idx_ = 0;
};

double kahan_total(const std::vector<double>& xs) {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

RunReport run_workload(const WorkloadSpec& spec, const Potential& pot) {
  spec.check();
  RunReport report;
  report.spec = spec;
  report.potential_name = pot.name();

  Strategy strat = spec.make_strategy();
  SplitMix64 engine(spec.seed);
  KeyStream keys(spec, engine.split());

  std::vector<Tree> pool;
  CostMeter meter;
  RunAggregates& agg = report.agg;
  bool have_slack = false, have_eq3 = false;

  const double w_total = spec.weight_insert + spec.weight_union + spec.weight_del_min;
  const bool eq3_applicable =
      spec.strategy == StrategyKind::WeightBiased && pot.kind() == PotentialKind::KSClamped;

  auto note_bounded = [&](LedgerEntry& e) {
    if (!e.bound) return;
    ++agg.bounded_ops;
    const double slack = e.slack();
    if (!have_slack || slack < agg.min_slack) agg.min_slack = slack;
    have_slack = true;
    if (slack < -kSlackTol) ++agg.bound_violations;
  };
  auto note_ratio = [&](std::uint64_t actual, std::uint64_t sz_ref) {
    if (sz_ref < 2) return;
    const double r = static_cast<double>(actual) / std::log2(static_cast<double>(sz_ref));
    agg.worst_actual_over_log2_sz = std::max(agg.worst_actual_over_log2_sz, r);
  };

  for (std::uint64_t i = 0; i < spec.n_ops; ++i) {
    const double roll = engine.next_double() * w_total;
    enum { Insert, Union, DelMin, Single } op;
    if (roll < spec.weight_insert)
      op = Insert;
    else if (roll < spec.weight_insert + spec.weight_union)
      op = Union;
    else
      op = DelMin;

    // Feasibility fallbacks grow the pool with fresh singletons, keeping the
    // run deterministic: union needs two heaps, del_min a non-empty one.
    if (op == Insert && pool.empty()) op = Single;
    if (op == Union && pool.size() < 2) op = Single;
    if (op == DelMin) {
      bool any = false;
      for (const Tree& t : pool)
        if (!t.is_empty()) {
          any = true;
          break;
        }
      if (!any) op = Single;
    }

    meter.reset();
    LedgerEntry entry;
    switch (op) {
      case Single: {
        const Tree t = single(keys.next());
        entry = amortized_step("single", 0, {}, {t}, pot);
        pool.push_back(t);
        break;
      }
      case Insert: {
        const std::size_t at = engine.next_below(pool.size());
        const Tree before = pool[at];
        const Tree after = insert(keys.next(), before, strat, meter);
        entry = amortized_step("insert", meter.comparisons, {before}, {after}, pot);
        note_ratio(meter.comparisons, after.sz());
        pool[at] = after;
        break;
      }
      case Union: {
        const std::size_t i1 = engine.next_below(pool.size());
        std::size_t i2 = engine.next_below(pool.size() - 1);
        if (i2 >= i1) ++i2;
        const Tree x = pool[i1], y = pool[i2];
        const Tree z = meld(x, y, strat, meter);
        entry = amortized_step("union", meter.comparisons, {x, y}, {z}, pot);
        entry.bound = bound_for("union", spec.strategy, pot, x.sz() + y.sz(), z.sz());
        note_bounded(entry);
        note_ratio(meter.comparisons, z.sz());
        if (eq3_applicable) {
          const double rhs = log_alpha(static_cast<double>(z.sz())) +
                             log_beta(static_cast<double>(x.sz())) +
                             log_beta(static_cast<double>(y.sz()));
          const double slack = rhs - entry.amortized;
          if (!have_eq3 || slack < agg.eq3_min_slack) agg.eq3_min_slack = slack;
          have_eq3 = true;
          ++agg.eq3_checked;
          if (slack < -kSlackTol) ++agg.eq3_violations;
        }
        pool[std::max(i1, i2)] = pool.back();
        pool.pop_back();
        pool[std::min(i1, i2)] = z;
        break;
      }
      case DelMin: {
        std::vector<std::size_t> candidates;
        for (std::size_t j = 0; j < pool.size(); ++j)
          if (!pool[j].is_empty()) candidates.push_back(j);
        const std::size_t at = candidates[engine.next_below(candidates.size())];
        const Tree before = pool[at];
        const Tree after = del_min(before, strat, meter);
        entry = amortized_step("del_min", meter.comparisons, {before}, {after}, pot);
        entry.bound = bound_for("del_min", spec.strategy, pot, before.sz(), after.sz());
        note_bounded(entry);
        note_ratio(meter.comparisons, before.sz());
        pool[at] = after;
        break;
      }
    }
    report.ledger.append(std::move(entry));
  }

  agg.ops = report.ledger.size();
  agg.mean_amortized = agg.ops ? report.ledger.sum_amortized() / static_cast<double>(agg.ops) : 0.0;

  std::vector<double> pool_phis;
  pool_phis.reserve(pool.size());
  for (const Tree& t : pool) pool_phis.push_back(pot(t));
  const double final_phi = kahan_total(pool_phis);
  agg.telescoping_error =
      std::abs((report.ledger.sum_amortized() - report.ledger.sum_actual()) - final_phi);
  return report;
}

std::string aggregates_json(const RunReport& report) {
  const RunAggregates& a = report.agg;
  const WorkloadSpec& s = report.spec;
  std::string out = "{";
  out += "\"bound_violations\":" + std::to_string(a.bound_violations);
  out += ",\"bounded_ops\":" + std::to_string(a.bounded_ops);
  out += ",\"eq3_checked\":" + std::to_string(a.eq3_checked);
  out += ",\"eq3_min_slack\":" + format_float(a.eq3_min_slack);
  out += ",\"eq3_violations\":" + std::to_string(a.eq3_violations);
  out += ",\"key_dist\":\"" + std::string(s.dist == KeyDist::UniformRange ? "uniform" : "permutation") + "\"";
  out += ",\"mean_amortized\":" + format_float(a.mean_amortized);
  out += ",\"min_slack\":" + format_float(a.min_slack);
  out += ",\"n_ops\":" + std::to_string(s.n_ops);
  out += ",\"potential\":\"" + report.potential_name + "\"";
  out += ",\"seed\":" + std::to_string(s.seed);
  out += ",\"strategy\":\"" + std::string(strategy_name(s.strategy)) + "\"";
  out += ",\"telescoping_error\":" + format_float(a.telescoping_error);
  out += ",\"worst_actual_over_log2_sz\":" + format_float(a.worst_actual_over_log2_sz);
  out += "}";
  return out;
}

}  // namespace heaplab
