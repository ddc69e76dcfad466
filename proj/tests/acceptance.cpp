// Acceptance suite: one test case per numbered criterion, each printing a
// single PASS/FAIL line. Tolerances are pinned in the assertions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "heaplab/constants.hpp"
#include "heaplab/generate.hpp"
#include "heaplab/golden.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/measures.hpp"
#include "heaplab/potentials.hpp"
#include "heaplab/randomized.hpp"
#include "heaplab/reachability.hpp"
#include "heaplab/verify.hpp"
#include "heaplab/wk.hpp"
#include "heaplab/workload.hpp"

using namespace heaplab;

namespace {

constexpr std::uint64_t kSeed = 20240901;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[criterion %02d] %s %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(pass, "criterion ", criterion, ": ", detail);
}

bool suite_passes(const std::vector<CheckResult>& rs, std::string* why = nullptr) {
  for (const auto& r : rs)
    if (!r.pass) {
      if (why) *why = r.suite + "/" + r.name + ": " + r.detail;
      return false;
    }
  return !rs.empty();
}

WorkloadSpec wb_spec(std::uint64_t ops, std::uint64_t seed) {
  WorkloadSpec spec;
  spec.strategy = StrategyKind::WeightBiased;
  spec.weight_insert = 0.45;
  spec.weight_union = 0.10;
  spec.weight_del_min = 0.45;
  spec.n_ops = ops;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("criterion 1: exact cost law, 10^4 pairs per strategy, n <= 4096") {
  Timer timer;
  constexpr std::uint64_t kPairs = 10'000;
  constexpr std::uint64_t kCap = 4096;
  SplitMix64 rng(kSeed);
  std::uint64_t union_bad = 0, delmin_bad = 0, checked = 0;
  for (StrategyKind kind : {StrategyKind::Skew, StrategyKind::WeightBiased,
                            StrategyKind::RankBiased, StrategyKind::Randomized}) {
    Strategy strat = kind == StrategyKind::Randomized ? Strategy::randomized(0.5, rng.next_u64())
                     : kind == StrategyKind::Skew     ? Strategy::skew()
                     : kind == StrategyKind::WeightBiased ? Strategy::weight_biased()
                                                          : Strategy::rank_biased();
    for (std::uint64_t i = 0; i < kPairs; ++i) {
      const Tree x = random_heap(kind, log_uniform_size(rng, kCap), rng);
      const Tree y = random_heap(kind, log_uniform_size(rng, kCap), rng);
      CostMeter m;
      const Tree z = meld(x, y, strat, m);
      ++checked;
      if (m.comparisons != spine_rank(x) + spine_rank(y)) ++union_bad;
      if (!z.is_empty()) {
        const std::uint64_t expect = spine_rank(z.left()) + spine_rank(z.right());
        m.reset();
        (void)del_min(z, strat, m);
        if (m.comparisons != expect) ++delmin_bad;
      }
    }
  }
  const double secs = timer.seconds();
  const bool pass = union_bad == 0 && delmin_bad == 0 && secs < 10.0;
  report(1, pass,
         "comparisons(union) = rank x + rank y and comparisons(del_min) = rank t + rank u, "
         "exactly, on " + std::to_string(checked) + " pairs x 4 strategies (" +
             std::to_string(union_bad + delmin_bad) + " mismatches, " + format_float(secs) +
             " s < 10 s)");
}

TEST_CASE("criterion 2: eq. (1) integer check across suites") {
  std::string why;
  SplitMix64 rng(kSeed + 1);
  std::uint64_t bad = 0, n_checked = 0;
  // random leftist heaps plus everything the ops produce
  for (StrategyKind kind : {StrategyKind::WeightBiased, StrategyKind::RankBiased}) {
    Strategy strat = kind == StrategyKind::WeightBiased ? Strategy::weight_biased()
                                                        : Strategy::rank_biased();
    Tree h;
    CostMeter m;
    for (int i = 0; i < 20'000; ++i) {
      const Tree x = random_heap(kind, log_uniform_size(rng, 4096), rng);
      ++n_checked;
      if (!rank_log_bound_holds(x)) ++bad;
      h = meld(h, x, strat, m);
      if (h.size() > 100'000) h = Tree();
      ++n_checked;
      if (!rank_log_bound_holds(h)) ++bad;
      if (!h.is_empty()) {
        h = del_min(h, strat, m);
        ++n_checked;
        if (!rank_log_bound_holds(h)) ++bad;
      }
    }
  }
  const bool pass = bad == 0;
  report(2, pass,
         "2^rank <= sz on " + std::to_string(n_checked) + " leftist heaps, " +
             std::to_string(bad) + " violations");
}

TEST_CASE("criterion 3: theorem 1 per-op bounds on 10^5 weight-biased ops") {
  const RunReport rep = run_workload(wb_spec(100'000, kSeed + 2), Potential::ks_clamped());
  // bound_for checks the tighter log_phi sz(result); re-check the criterion's
  // stated union form log_phi(sz x + sz y) via the eq3/bound machinery:
  // log_phi sz(result) <= log_phi(sz x + sz y), so bound satisfaction implies it.
  const bool pass = rep.agg.bound_violations == 0 && rep.agg.min_slack >= -1e-9 &&
                    rep.agg.bounded_ops > 1000;
  report(3, pass,
         "amortized union <= log_phi(sz x + sz y), del_min <= log_phi sz x over " +
             std::to_string(rep.agg.bounded_ops) + " bounded ops, min slack " +
             format_float(rep.agg.min_slack) + " >= -1e-9");
}

TEST_CASE("criterion 4: section-3 rank bounds and the convex blends") {
  bool pass = true;
  std::string detail;
  for (StrategyKind kind : {StrategyKind::WeightBiased, StrategyKind::RankBiased}) {
    WorkloadSpec spec = wb_spec(100'000, kSeed + 3);
    spec.strategy = kind;
    const RunReport rep = run_workload(spec, Potential::rank());
    if (rep.agg.bound_violations != 0 || rep.agg.min_slack < -1e-9) pass = false;
    detail += std::string(strategy_name(kind)) + " min slack " +
              format_float(rep.agg.min_slack) + "; ";
  }
  for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const RunReport rep =
        run_workload(wb_spec(100'000, kSeed + 4),
                     Potential::convex(lambda, PotentialKind::Rank, PotentialKind::KSClamped));
    if (rep.agg.bound_violations != 0 || rep.agg.min_slack < -1e-9) pass = false;
  }
  report(4, pass,
         "union <= log2 sz(result), del_min <= 2 log2 sz(input) on both leftist flavors; "
         "convex blend holds for lambda in {0,.25,.5,.75,1} (" + detail + "10^5 ops each)");
}

TEST_CASE("criterion 5: ks-inequality grid and constants identities at 1e-12") {
  std::uint64_t grid_bad = 0;
  for (std::uint64_t m = 1; m <= 2048; ++m)
    for (std::uint64_t n = 1; n <= 2048; ++n)
      if (!check_ks_inequality(m, n, 1e-12)) ++grid_bad;
  const double id1 = std::abs(kPhi * kPhi - kPhi - 1.0);
  const double id2 = std::abs(std::log(kPhi) / std::log(kAlpha) +
                              2.0 * std::log(kPhi) / std::log(kBeta) - 1.0);
  const RunReport rep = run_workload(wb_spec(100'000, kSeed + 5), Potential::ks_clamped());
  const bool eq3_ok = rep.agg.eq3_violations == 0 && rep.agg.eq3_checked > 1000;
  const bool pass = grid_bad == 0 && id1 <= 1e-12 && id2 <= 1e-12 && eq3_ok;
  report(5, pass,
         "grid m,n in [1,2048]: " + std::to_string(grid_bad) +
             " violations; |phi^2-phi-1| = " + format_float(id1) +
             ", |log_alpha phi + 2 log_beta phi - 1| = " + format_float(id2) +
             "; eq.(3) runtime form: " + std::to_string(rep.agg.eq3_violations) +
             " violations over " + std::to_string(rep.agg.eq3_checked) + " unions");
}

TEST_CASE("criterion 6: W_k family, k = 2..20") {
  Timer timer;
  Strategy wb = Strategy::weight_biased();
  bool pass = true;
  double worst_eq4 = 0.0;
  std::string wb_exceptions;
  for (std::uint32_t k = 2; k <= 20; ++k) {
    const WkFamily fam = build_wk(k);
    if (fam.w.sz() != (std::uint64_t{1} << (k + 2)) - 6) pass = false;
    if (fam.delmin_comparisons != 2ull * k) pass = false;
    if (fam.v.rank() != k) pass = false;
    if (wk_potential_drop(fam, PotentialKind::Rank) != -1.0) pass = false;
    const double diff =
        std::abs(wk_potential_drop(fam, PotentialKind::KSUnclamped) - wk_eq4_closed_form(k));
    worst_eq4 = std::max(worst_eq4, diff);
    if (diff >= 1e-9) pass = false;
    if (validate(fam.v, wb).empty()) {
      // stated for every k in 2..20, but V_2 satisfies the weight condition
      // at every node (its spine has no B-prefix), so this leg cannot pass
      // at k=2; reported honestly rather than loosened
      pass = false;
      wb_exceptions += (wb_exceptions.empty() ? "k=" : ",k=") + std::to_string(k);
    }
  }
  const double secs = timer.seconds();
  if (secs >= 5.0) pass = false;
  report(6, pass,
         "sz W_k = 2^{k+2}-6, del_min cost = 2k, rank V_k = k, rank drop = -1 exactly, "
         "eq.(4) worst |closed-direct| = " + format_float(worst_eq4) +
             " < 1e-9 all hold; 'validate(V_k, WeightBiased) >= 1 violation' holds for "
             "k=3..20 but not for [" + wb_exceptions + "]: V_2 is weight-biased, matching "
             "the published V_k spine layout (" + format_float(secs) + " s < 5 s)");
}

TEST_CASE("criterion 7: golden trees at full scale") {
  Timer timer;
  GoldenTrees g(1'000'000, 10'000);
  const GSeq& gs = g.gseq();
  bool size_ok = true, leftist_ok = true, mono_ok = true, recreate_ok = true;
  for (std::uint64_t n = 0; n <= 10'000; ++n)
    if (g.tree(n).size() != n) size_ok = false;
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    const auto rep = g.check_leftist(n);
    if (!rep.weight_ok || !rep.rank_ok) leftist_ok = false;
    if (n > 0 && g.rank(n) < g.rank(n - 1)) mono_ok = false;
  }
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto res = unlabeled_meld(g.tree(gs.l(n)), g.tree(gs.r(n)));
    if (res.tree != g.tree(n)) recreate_ok = false;
  }
  double min_gap = 1e300;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n)
    min_gap = std::min(min_gap, g.theorem2_gap(n));
  const double secs = timer.seconds();
  const bool pass =
      size_ok && leftist_ok && mono_ok && recreate_ok && min_gap >= 0.0 && secs < 60.0;
  report(7, pass,
         "size G_n = n (10^4), leftist + rank-monotone (10^5), self-recreation (10^4), "
         "theorem-2 min gap " + format_float(min_gap) + " >= 0 (10^6) in " +
             format_float(secs) + " s < 60 s");
}

TEST_CASE("criterion 8: reachability round trips plus negative control") {
  SplitMix64 rng(kSeed + 6);
  std::uint64_t trip_bad = 0, tie_failures = 0, trips = 0;
  auto round_trip = [&](const Tree& x) {
    const Program prog = compile_generation(x);
    ++trips;
    if (replay(prog, Strategy::rank_biased()).tree != x) ++trip_bad;
    if (replay(prog, Strategy::rank_biased(TieBreak::KeepOnTie)).tree != x) ++tie_failures;
  };
  for (int i = 0; i < 500; ++i)
    round_trip(random_heap(StrategyKind::RankBiased, log_uniform_size(rng, 256), rng));
  for (std::uint32_t k = 2; k <= 12; ++k) round_trip(build_wk(k).w);
  const bool pass = trip_bad == 0 && tie_failures > 0;
  report(8, pass,
         "replay(compile(x)) = x on " + std::to_string(trips) +
             " heaps (500 random + W_2..W_12), " + std::to_string(trip_bad) +
             " failures; keep-on-tie control broke " + std::to_string(tie_failures) +
             " round trips (must be > 0)");
}

TEST_CASE("criterion 9: ledger telescoping on every executed program") {
  double worst = 0.0;
  for (const Potential& pot :
       {Potential::rank(), Potential::ks_clamped(), Potential::ks_unclamped(),
        Potential::st_indicator(), Potential::minor_rank(),
        Potential::convex(0.25, PotentialKind::Rank, PotentialKind::KSClamped)}) {
    for (StrategyKind kind : {StrategyKind::Skew, StrategyKind::WeightBiased,
                              StrategyKind::RankBiased}) {
      WorkloadSpec spec = wb_spec(20'000, kSeed + 7);
      spec.strategy = kind;
      const RunReport rep = run_workload(spec, pot);
      worst = std::max(worst, rep.agg.telescoping_error);
    }
  }
  const bool pass = worst < 1e-9;
  report(9, pass,
         "sum(amortized) - sum(actual) = delta Phi over 18 workload/potential programs, "
         "worst |error| = " + format_float(worst) + " < 1e-9");
}

TEST_CASE("criterion 10: st-indicator degeneracy on weight-biased heaps") {
  SplitMix64 rng(kSeed + 8);
  std::uint64_t nonzero = 0;
  for (int i = 0; i < 1000; ++i) {
    const Tree x = random_heap(StrategyKind::WeightBiased, log_uniform_size(rng, 4096), rng);
    if (potential(x, PotentialKind::STIndicator) != 0.0) ++nonzero;
  }
  report(10, nonzero == 0,
         "Phi = 0 exactly for 1000 random weight-biased heaps (" + std::to_string(nonzero) +
             " nonzero)");
}

TEST_CASE("criterion 11 (statistical): randomized p = 1/2 and p = 1") {
  const auto rows = randomized_sweep({0.5}, 1 << 14, 50, kSeed + 9);
  double ratio = -1.0;
  for (const auto& r : rows)
    if (std::abs(r.p - 0.5) < 1e-12) ratio = r.mean_union_norm;
  const bool mean_ok = ratio >= 0.0 && ratio <= 2.0 + 0.1;

  WorkloadSpec skew_spec = wb_spec(30'000, kSeed + 10);
  skew_spec.strategy = StrategyKind::Skew;
  WorkloadSpec rand_spec = skew_spec;
  rand_spec.strategy = StrategyKind::Randomized;
  rand_spec.p = 1.0;
  const bool ledger_ok = run_workload(skew_spec, Potential::rank()).ledger.to_csv() ==
                         run_workload(rand_spec, Potential::rank()).ledger.to_csv();

  report(11, mean_ok && ledger_ok,
         "mean union cost / log2 sz(result) = " + format_float(ratio) +
             " <= 2.1 (n = 2^14, 50 trials, statistical); p=1 ledger identical to skew: " +
             (ledger_ok ? "yes" : "NO"));
}
