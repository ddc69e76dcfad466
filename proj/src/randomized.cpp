#include "heaplab/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "heaplab/constants.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/potentials.hpp"
#include "heaplab/rng.hpp"

namespace heaplab {

namespace {

struct Stats {
  double sum = 0.0, sum_sq = 0.0, max = 0.0;
  std::uint64_t count = 0;
  void add(double v) {
    sum += v;
    sum_sq += v * v;
    max = std::max(max, v);
    ++count;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double ci95() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double var =
        std::max(0.0, (sum_sq - static_cast<double>(count) * m * m) / static_cast<double>(count - 1));
    return 1.96 * std::sqrt(var / static_cast<double>(count));
  }
};

Tree build_random(std::uint64_t nkeys, Strategy& strat, SplitMix64& keys, CostMeter& m) {
  Tree h;
  for (std::uint64_t i = 0; i < nkeys; ++i)
    h = insert(static_cast<Key>(keys.next_below(1'000'000'000ULL)), h, strat, m);
  return h;
}

}  // namespace

std::vector<RandomizedRow> randomized_sweep(std::vector<double> p_grid, std::uint64_t n,
                                            std::uint64_t trials, std::uint64_t seed) {
  for (double p : {0.5, 1.0 / kPhi, 1.0})
    if (std::none_of(p_grid.begin(), p_grid.end(),
                     [&](double q) { return std::abs(q - p) < 1e-12; }))
      p_grid.push_back(p);
  std::sort(p_grid.begin(), p_grid.end());

  std::vector<RandomizedRow> rows;
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bias p outside [0,1]");
    RandomizedRow row;
    row.p = p;
    row.n = n;
    row.trials = trials;
    Stats u_cost, u_norm, d_cost, d_norm;
    for (std::uint64_t t = 0; t < trials; ++t) {
      SplitMix64 trial_rng(seed ^ (0x517CC1B727220A95ULL * (t + 1)));
      Strategy strat = Strategy::randomized(p, trial_rng.next_u64());
      SplitMix64 keys = trial_rng.split();
      CostMeter build_m;
      const Tree a = build_random(n / 2, strat, keys, build_m);
      const Tree b = build_random(n - n / 2, strat, keys, build_m);
      CostMeter m;
      const Tree z = meld(a, b, strat, m);
      const double denom = std::log2(static_cast<double>(z.sz()));
      u_cost.add(static_cast<double>(m.comparisons));
      u_norm.add(static_cast<double>(m.comparisons) / denom);
      m.reset();
      (void)del_min(z, strat, m);
      d_cost.add(static_cast<double>(m.comparisons));
      d_norm.add(static_cast<double>(m.comparisons) / denom);
    }
    row.mean_union = u_cost.mean();
    row.max_union = u_cost.max;
    row.mean_union_norm = u_norm.mean();
    row.ci95_union_norm = u_norm.ci95();
    row.mean_delmin = d_cost.mean();
    row.max_delmin = d_cost.max;
    row.mean_delmin_norm = d_norm.mean();
    row.ci95_delmin_norm = d_norm.ci95();
    rows.push_back(row);
  }
  return rows;
}

std::string randomized_csv(const std::vector<RandomizedRow>& rows) {
  std::string out =
      "p,n,trials,mean_union,max_union,mean_union_norm,ci95_union_norm,"
      "mean_delmin,max_delmin,mean_delmin_norm,ci95_delmin_norm\n";
  for (const auto& r : rows) {
    out += format_float(r.p);
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.trials);
    out += ',' + format_float(r.mean_union);
    out += ',' + format_float(r.max_union);
    out += ',' + format_float(r.mean_union_norm);
    out += ',' + format_float(r.ci95_union_norm);
    out += ',' + format_float(r.mean_delmin);
    out += ',' + format_float(r.max_delmin);
    out += ',' + format_float(r.mean_delmin_norm);
    out += ',' + format_float(r.ci95_delmin_norm);
    out += '\n';
  }
  return out;
}

}  // namespace heaplab
