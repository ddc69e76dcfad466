#include "heaplab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "heaplab/constants.hpp"
#include "heaplab/generate.hpp"
#include "heaplab/golden.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/measures.hpp"
#include "heaplab/potentials.hpp"
#include "heaplab/reachability.hpp"
#include "heaplab/wk.hpp"
#include "heaplab/workload.hpp"

namespace heaplab {

namespace {

constexpr double kSlackTol = 1e-9;
constexpr double kGridTol = 1e-12;

using Results = std::vector<CheckResult>;

void add(Results& out, std::string suite, std::string name, bool pass, double worst,
         std::string detail) {
  out.push_back({std::move(suite), std::move(name), pass, worst, std::move(detail)});
}

Strategy strategy_of(StrategyKind kind, std::uint64_t seed) {
  switch (kind) {
    case StrategyKind::Skew: return Strategy::skew();
    case StrategyKind::WeightBiased: return Strategy::weight_biased();
    case StrategyKind::RankBiased: return Strategy::rank_biased();
    default: return Strategy::randomized(0.5, seed);
  }
}

// ---------------------------------------------------------------- costs ---

Results suite_costs(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t pairs = scale ? scale : 10'000;
  constexpr std::uint64_t kCap = 4096;
  Results out;
  const StrategyKind kinds[] = {StrategyKind::Skew, StrategyKind::WeightBiased,
                                StrategyKind::RankBiased, StrategyKind::Randomized};
  std::uint64_t union_bad = 0, delmin_bad = 0, eq1_bad = 0, closure_bad = 0;
  std::uint64_t checked = 0, eq1_checked = 0;
  SplitMix64 rng(seed);
  for (StrategyKind kind : kinds) {
    Strategy strat = strategy_of(kind, rng.next_u64());
    const bool leftist =
        kind == StrategyKind::WeightBiased || kind == StrategyKind::RankBiased;
    for (std::uint64_t i = 0; i < pairs; ++i) {
      const Tree x = random_heap(kind, log_uniform_size(rng, kCap), rng);
      const Tree y = random_heap(kind, log_uniform_size(rng, kCap), rng);
      CostMeter m;
      const Tree z = meld(x, y, strat, m);
      ++checked;
      if (m.comparisons != spine_rank(x) + spine_rank(y)) ++union_bad;
      if (!z.is_empty()) {
        const std::uint64_t expect = spine_rank(z.left()) + spine_rank(z.right());
        m.reset();
        const Tree d = del_min(z, strat, m);
        if (m.comparisons != expect) ++delmin_bad;
        if (leftist) {
          eq1_checked += 4;
          for (const Tree* t : {&x, &y, &z, &d})
            if (!rank_log_bound_holds(*t)) ++eq1_bad;
        }
        if (i % 64 == 0 && !validate(d, strat).empty()) ++closure_bad;
      }
      if (i % 64 == 0 && !validate(z, strat).empty()) ++closure_bad;
    }
  }
  add(out, "costs", "union-cost-law", union_bad == 0, 0.0,
      "comparisons(union) == rank x + rank y on " + std::to_string(checked) +
          " pairs (spine oracle), " + std::to_string(union_bad) + " mismatches");
  add(out, "costs", "delmin-cost-law", delmin_bad == 0, 0.0,
      "comparisons(del_min) == rank t + rank u, " + std::to_string(delmin_bad) +
          " mismatches");
  add(out, "costs", "eq1-leftist", eq1_bad == 0, 0.0,
      "2^rank <= sz on " + std::to_string(eq1_checked) + " leftist heaps, " +
          std::to_string(eq1_bad) + " violations");
  add(out, "costs", "closure-validate", closure_bad == 0, 0.0,
      "sampled results validate under their strategy, " + std::to_string(closure_bad) +
          " failures");
  return out;
}

// -------------------------------------------------------------- leftist ---

Results suite_leftist(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t heaps = scale ? scale : 4'000;
  Results out;
  SplitMix64 rng(seed + 1);
  std::uint64_t eq1_bad = 0, cache_bad = 0;
  for (std::uint64_t i = 0; i < heaps; ++i) {
    const StrategyKind kind =
        (i & 1) ? StrategyKind::WeightBiased : StrategyKind::RankBiased;
    const Tree x = random_heap(kind, log_uniform_size(rng, 2048), rng);
    if (!rank_log_bound_holds(x)) ++eq1_bad;
    if (spine_rank(x) != x.rank() || recount_size(x) != x.size()) ++cache_bad;
  }
  add(out, "leftist", "eq1-random-heaps", eq1_bad == 0, 0.0,
      "2^rank <= sz on " + std::to_string(heaps) + " leftist heaps, " +
          std::to_string(eq1_bad) + " violations");
  add(out, "leftist", "cached-vs-recomputed", cache_bad == 0, 0.0,
      "cached rank/size equal recomputation, " + std::to_string(cache_bad) + " mismatches");

  // Negative control: a right-degenerate skew heap must violate the bound,
  // otherwise the check has no teeth.
  Tree chain;
  for (int k = 64; k >= 1; --k) chain = Tree::node(Tree(), k, chain);
  const bool violated = !rank_log_bound_holds(chain);
  add(out, "leftist", "eq1-negative-control", violated, 0.0,
      "right-degenerate skew heap of n=64 violates 2^rank <= sz: " +
          std::string(violated ? "yes" : "NO"));
  return out;
}

// --------------------------------------------------------------- lemma2 ---

Results suite_lemma2(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t pairs = scale ? scale : 10'000;
  Results out;
  SplitMix64 rng(seed + 2);
  std::uint64_t bad[4] = {0, 0, 0, 0};
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const Tree x = random_heap(StrategyKind::RankBiased, log_uniform_size(rng, 512), rng);
    const Tree y = random_heap(StrategyKind::RankBiased, log_uniform_size(rng, 512), rng);
    const Lemma2Report rep = check_lemma2(x, y);
    if (!rep.rank_le_prank_le_log) ++bad[0];
    if (!rep.rank_meld_between) ++bad[1];
    if (!rep.rank_meld_le_max_prank) ++bad[2];
    if (!rep.prank_meld_between) ++bad[3];
  }
  const char* names[4] = {"lemma2-i", "lemma2-ii", "lemma2-iii", "lemma2-iv"};
  const char* descs[4] = {"rank <= prank <= log2 sz + 1", "min <= rank(meld) <= sum",
                          "rank(meld) <= max prank", "min <= prank(meld) <= sum"};
  for (int j = 0; j < 4; ++j)
    add(out, "lemma2", names[j], bad[j] == 0, 0.0,
        std::string(descs[j]) + " on " + std::to_string(pairs) + " rank-biased pairs, " +
            std::to_string(bad[j]) + " violations");
  return out;
}

// ------------------------------------------------------------- theorem1 ---

Results suite_theorem1(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t ops = scale ? scale : 100'000;
  Results out;

  const double id1 = std::abs(kPhi * kPhi - kPhi - 1.0);
  const double id2 = std::abs(std::log(kPhi) / std::log(kAlpha) +
                              2.0 * std::log(kPhi) / std::log(kBeta) - 1.0);
  add(out, "theorem1", "constants-identities", id1 <= kGridTol && id2 <= kGridTol,
      std::max(id1, id2),
      "phi^2 = phi+1 and log_alpha phi + 2 log_beta phi = 1 within 1e-12");

  // KS inequality plus the term range and the Eq. (2) monotonicity on the
  // full integer grid.
  std::uint64_t grid_bad = 0, range_bad = 0, eq2_bad = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  const std::uint64_t grid = 2048;
  for (std::uint64_t m = 1; m <= grid; ++m) {
    for (std::uint64_t n = 1; n <= grid; ++n) {
      const double md = static_cast<double>(m), nd = static_cast<double>(n);
      const double lhs = log_beta(kBeta * nd / (md + nd));
      const double rhs = log_alpha((md + nd) / md);
      worst_margin = std::min(worst_margin, rhs - lhs);
      if (lhs > rhs + kGridTol) ++grid_bad;
      const double clamped = std::max(lhs, 0.0);
      if (clamped < 0.0 || clamped > 1.0 + kGridTol) ++range_bad;
      if (m <= n) {
        // phi(u,t) <= phi(t,u) when sz t <= sz u, both variants
        const double tu_unc = log_beta(kBeta * nd / (md + nd));
        const double ut_unc = log_beta(kBeta * md / (md + nd));
        if (ut_unc > tu_unc + kGridTol) ++eq2_bad;
        if (std::max(ut_unc, 0.0) > std::max(tu_unc, 0.0) + kGridTol) ++eq2_bad;
      }
    }
  }
  add(out, "theorem1", "ks-inequality-grid", grid_bad == 0, worst_margin,
      "log_beta(beta n/(m+n)) <= log_alpha((m+n)/m) on m,n in [1,2048], " +
          std::to_string(grid_bad) + " violations");
  add(out, "theorem1", "ks-term-range", range_bad == 0, 0.0,
      "0 <= clamped node term <= 1 on the grid, " + std::to_string(range_bad) +
          " violations");
  add(out, "theorem1", "eq2-monotonicity", eq2_bad == 0, 0.0,
      "sz t <= sz u implies phi(u,t) <= phi(t,u), " + std::to_string(eq2_bad) +
          " violations");

  WorkloadSpec spec;
  spec.strategy = StrategyKind::WeightBiased;
  spec.weight_insert = 0.45;
  spec.weight_union = 0.10;
  spec.weight_del_min = 0.45;
  spec.n_ops = ops;
  spec.seed = seed + 3;
  const RunReport rep = run_workload(spec, Potential::ks_clamped());
  add(out, "theorem1", "per-op-bounds", rep.agg.bound_violations == 0, rep.agg.min_slack,
      "union <= log_phi sz(result), del_min <= log_phi sz(input) over " +
          std::to_string(rep.agg.bounded_ops) + " bounded ops (weight-biased, ks-clamped), " +
          std::to_string(rep.agg.bound_violations) + " violations");
  add(out, "theorem1", "eq3-runtime", rep.agg.eq3_violations == 0, rep.agg.eq3_min_slack,
      "amortized union <= log_alpha sz(result) + log_beta sz x + log_beta sz y on " +
          std::to_string(rep.agg.eq3_checked) + " unions, " +
          std::to_string(rep.agg.eq3_violations) + " violations");
  add(out, "theorem1", "telescoping", rep.agg.telescoping_error < kSlackTol,
      rep.agg.telescoping_error,
      "sum(amortized) - sum(actual) == phi(final heaps), error " +
          format_float(rep.agg.telescoping_error));

  SplitMix64 rng(seed + 4);
  std::uint64_t sti_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Tree x = random_heap(StrategyKind::WeightBiased, log_uniform_size(rng, 2048), rng);
    if (x.phi_st_indicator() != 0.0) ++sti_bad;
  }
  add(out, "theorem1", "st-indicator-degeneracy", sti_bad == 0, 0.0,
      "Phi = 0 exactly for 1000 random weight-biased heaps, " + std::to_string(sti_bad) +
          " nonzero");
  return out;
}

// ------------------------------------------------------------- section3 ---

Results suite_section3(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t ops = scale ? scale : 100'000;
  Results out;
  for (StrategyKind kind : {StrategyKind::WeightBiased, StrategyKind::RankBiased}) {
    WorkloadSpec spec;
    spec.strategy = kind;
    spec.weight_insert = 0.45;
    spec.weight_union = 0.10;
    spec.weight_del_min = 0.45;
    spec.n_ops = ops;
    spec.seed = seed + 5;
    const RunReport rep = run_workload(spec, Potential::rank());
    add(out, "section3", std::string("rank-bounds-") + strategy_name(kind),
        rep.agg.bound_violations == 0 && rep.agg.telescoping_error < kSlackTol,
        rep.agg.min_slack,
        "union <= log2 sz(result), del_min <= 2 log2 sz(input) over " +
            std::to_string(rep.agg.bounded_ops) + " bounded ops, " +
            std::to_string(rep.agg.bound_violations) + " violations, telescoping error " +
            format_float(rep.agg.telescoping_error));
  }
  return out;
}

// --------------------------------------------------------------- convex ---

Results suite_convex(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t ops = scale ? scale : 100'000;
  Results out;
  for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    WorkloadSpec spec;
    spec.strategy = StrategyKind::WeightBiased;
    spec.weight_insert = 0.45;
    spec.weight_union = 0.10;
    spec.weight_del_min = 0.45;
    spec.n_ops = ops;
    spec.seed = seed + 6;
    const Potential pot =
        Potential::convex(lambda, PotentialKind::Rank, PotentialKind::KSClamped);
    const RunReport rep = run_workload(spec, pot);
    add(out, "convex", "blend-lambda-" + format_float(lambda),
        rep.agg.bound_violations == 0 && rep.agg.telescoping_error < kSlackTol,
        rep.agg.min_slack,
        "blended per-op bound over " + std::to_string(rep.agg.bounded_ops) +
            " bounded ops, " + std::to_string(rep.agg.bound_violations) + " violations");
  }
  return out;
}

// ------------------------------------------------------------------- wk ---

Results suite_wk(std::uint64_t scale, std::uint64_t seed) {
  (void)seed;
  const std::uint32_t k_max = scale ? static_cast<std::uint32_t>(scale) : 20;
  Results out;
  bool sz_ok = true, cost_ok = true, rankv_ok = true, drop_ok = true, valid_ok = true,
       not_wb_ok = true;
  double worst_eq4 = 0.0;
  Strategy rb = Strategy::rank_biased();
  Strategy wb = Strategy::weight_biased();
  for (std::uint32_t k = 2; k <= k_max; ++k) {
    const WkFamily fam = build_wk(k);
    if (fam.w.sz() != (std::uint64_t{1} << (k + 2)) - 6) sz_ok = false;
    if (fam.t.sz() != (std::uint64_t{1} << (k + 1)) - 4) sz_ok = false;
    if (fam.u.sz() != (std::uint64_t{1} << (k + 1)) - 2) sz_ok = false;
    if (fam.delmin_comparisons != 2ull * k) cost_ok = false;
    if (fam.v.rank() != k) rankv_ok = false;
    if (wk_potential_drop(fam, PotentialKind::Rank) != -1.0) drop_ok = false;
    const double diff =
        std::abs(wk_potential_drop(fam, PotentialKind::KSUnclamped) - wk_eq4_closed_form(k));
    worst_eq4 = std::max(worst_eq4, diff);
    if (diff >= kSlackTol) drop_ok = false;
    if (!validate(fam.w, rb).empty()) valid_ok = false;
    // sz T_k < sz U_k: the literal root order has exactly one weight
    // violation; the mirrored root order is leftist both ways.
    if (validate(fam.w, wb).size() != 1) valid_ok = false;
    const Tree mirrored = Tree::node(fam.u, 0, fam.t);
    if (!validate(mirrored, wb).empty() || !validate(mirrored, rb).empty()) valid_ok = false;
    // V_k escapes the weight-biased class for every k >= 3; V_2 is the
    // degenerate exception (its B-prefix of the spine is empty).
    if (k == 2 ? !validate(fam.v, wb).empty() : validate(fam.v, wb).empty())
      not_wb_ok = false;
  }
  const std::string range = "k = 2.." + std::to_string(k_max);
  add(out, "wk", "family-sizes", sz_ok, 0.0, "sz laws for B/T/U/W exact, " + range);
  add(out, "wk", "delmin-cost-2k", cost_ok, 0.0, "del_min(W_k) costs exactly 2k, " + range);
  add(out, "wk", "rank-vk", rankv_ok, 0.0, "rank V_k = k, " + range);
  add(out, "wk", "potential-drops", drop_ok, worst_eq4,
      "rank drop -1 exact; ks-unclamped drop matches the closed form, worst |diff| " +
          format_float(worst_eq4));
  add(out, "wk", "wk-validates", valid_ok, 0.0,
      "W_k rank-biased valid; weight check fails only at the root (sz T_k < sz U_k), and "
      "the root-mirrored family is leftist both ways, " + range);
  add(out, "wk", "vk-not-weight-biased", not_wb_ok, 0.0,
      "validate(V_k, weight-biased) reports >= 1 violation for k >= 3; V_2 is the known "
      "degenerate exception, " + range);
  return out;
}

// --------------------------------------------------------------- golden ---

Results suite_golden(std::uint64_t scale, std::uint64_t seed) {
  (void)seed;
  const std::uint64_t n_max = scale ? scale : 1'000'000;
  const std::uint64_t leftist_n = std::min<std::uint64_t>(n_max, 100'000);
  const std::uint64_t recreate_n = std::min<std::uint64_t>(n_max, 10'000);
  Results out;
  GoldenTrees g(n_max, recreate_n);
  const GSeq& gs = g.gseq();

  bool gseq_ok = gs.l(13) == 8 && gs.r(13) == 5;
  for (std::uint64_t n = 1; n <= n_max && gseq_ok; ++n) {
    const std::uint64_t d = gs.l(n) - gs.l(n - 1);
    if (d > 1 || gs.l(n) < gs.r(n)) gseq_ok = false;
  }
  add(out, "golden", "gseq-sanity", gseq_ok, 0.0,
      "L(13)=8, R(13)=5; L nondecreasing with steps in {0,1}; L(n) >= R(n) up to n=" +
          std::to_string(n_max));

  bool size_ok = true;
  for (std::uint64_t n = 0; n <= recreate_n && size_ok; ++n)
    if (g.tree(n).size() != n) size_ok = false;
  add(out, "golden", "size-equals-order", size_ok, 0.0,
      "size G_n = n on materialized trees, n <= " + std::to_string(recreate_n));

  bool leftist_ok = true, mono_ok = true;
  for (std::uint64_t n = 0; n <= leftist_n; ++n) {
    const auto rep = g.check_leftist(n);
    if (!rep.weight_ok || !rep.rank_ok) leftist_ok = false;
    if (n > 0 && g.rank(n) < g.rank(n - 1)) mono_ok = false;
  }
  add(out, "golden", "leftist-conditions", leftist_ok, 0.0,
      "weight and rank leftist conditions at every node of G_n, n <= " +
          std::to_string(leftist_n));
  add(out, "golden", "rank-monotone", mono_ok, 0.0,
      "rank G_n nondecreasing, n <= " + std::to_string(leftist_n));

  bool recreate_ok = true;
  for (std::uint64_t n = 1; n <= recreate_n && recreate_ok; ++n) {
    const auto res = unlabeled_meld(g.tree(gs.l(n)), g.tree(gs.r(n)));
    if (res.tree != g.tree(n)) recreate_ok = false;
    if (res.steps != g.tree(gs.l(n)).rank() + g.tree(gs.r(n)).rank()) recreate_ok = false;
  }
  add(out, "golden", "self-recreation", recreate_ok, 0.0,
      "G_n = meld(G_L(n), G_R(n)) with steps = rank + rank, n <= " +
          std::to_string(recreate_n));

  double min_gap = std::numeric_limits<double>::infinity();
  for (std::uint64_t n = 1; n <= n_max; ++n) min_gap = std::min(min_gap, g.theorem2_gap(n));
  add(out, "golden", "theorem2-gap", min_gap >= 0.0, min_gap,
      "rank G_L(n) + rank G_R(n) >= log_phi(n+1) - 2, min gap " + format_float(min_gap) +
          " over n <= " + std::to_string(n_max));
  return out;
}

// --------------------------------------------------------- reachability ---

Results suite_reachability(std::uint64_t scale, std::uint64_t seed) {
  const std::uint64_t heaps = scale ? scale : 500;
  Results out;
  SplitMix64 rng(seed + 7);
  Strategy rb = Strategy::rank_biased();
  std::uint64_t trip_bad = 0, pre_bad = 0, tie_fail = 0;
  auto round_trip = [&](const Tree& x) {
    const Program prog = compile_generation(x);
    if (replay(prog, Strategy::rank_biased()).tree != x) ++trip_bad;
    if (replay(prog, Strategy::rank_biased(TieBreak::KeepOnTie)).tree != x) ++tie_fail;
  };
  for (std::uint64_t i = 0; i < heaps; ++i) {
    const Tree x = random_heap(StrategyKind::RankBiased, log_uniform_size(rng, 256), rng);
    const Tree y = preimage(x);
    CostMeter m;
    Strategy s = Strategy::rank_biased();
    if (!validate(y, rb).empty() || meld(Tree(), y, s, m) != x) ++pre_bad;
    round_trip(x);
  }
  for (std::uint32_t k = 2; k <= 12; ++k) round_trip(build_wk(k).w);
  add(out, "reachability", "preimage-valid", pre_bad == 0, 0.0,
      "preimage validates and meld((), y) = x on " + std::to_string(heaps) + " heaps, " +
          std::to_string(pre_bad) + " failures");
  add(out, "reachability", "round-trip", trip_bad == 0, 0.0,
      "replay(compile(x)) = x on " + std::to_string(heaps) + " random heaps + W_2..W_12, " +
          std::to_string(trip_bad) + " failures");
  add(out, "reachability", "keep-on-tie-control", tie_fail > 0, 0.0,
      "keep-on-tie replay breaks " + std::to_string(tie_fail) +
          " round trips (must be nonzero)");
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "costs",  "leftist", "lemma2", "theorem1",     "section3",
      "convex", "wk",      "golden", "reachability",
  };
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t scale,
                                   std::uint64_t seed) {
  if (suite == "costs") return suite_costs(scale, seed);
  if (suite == "leftist") return suite_leftist(scale, seed);
  if (suite == "lemma2") return suite_lemma2(scale, seed);
  if (suite == "theorem1") return suite_theorem1(scale, seed);
  if (suite == "section3") return suite_section3(scale, seed);
  if (suite == "convex") return suite_convex(scale, seed);
  if (suite == "wk") return suite_wk(scale, seed);
  if (suite == "golden") return suite_golden(scale, seed);
  if (suite == "reachability") return suite_reachability(scale, seed);
  if (suite == "all") {
    Results out;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name, 0, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace heaplab
