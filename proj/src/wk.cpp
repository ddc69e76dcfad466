#include "heaplab/wk.hpp"

#include <stdexcept>

#include "heaplab/constants.hpp"
#include "heaplab/heap.hpp"

namespace heaplab {

Tree perfect_tree(std::uint32_t k, Key a) {
  Tree t;
  for (std::uint32_t i = 0; i < k; ++i) t = Tree::node(t, a, t);
  return t;
}

WkFamily build_wk(std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("build_wk needs k >= 2");
  WkFamily fam;
  fam.k = k;
  fam.t = Tree::node(single(0), 0, single(2));
  fam.u = Tree::node(perfect_tree(2, 1), 1, single(1));
  for (std::uint32_t i = 3; i <= k; ++i) {
    fam.t = Tree::node(perfect_tree(i, 0), 0, fam.t);
    fam.u = Tree::node(perfect_tree(i, 1), 1, fam.u);
  }
  fam.w = Tree::node(fam.t, 0, fam.u);
  Strategy s = Strategy::rank_biased();
  CostMeter m;
  fam.v = del_min(fam.w, s, m);
  fam.delmin_comparisons = m.comparisons;
  return fam;
}

double wk_potential_drop(const WkFamily& fam, PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Rank:
      return static_cast<double>(fam.v.rank()) - static_cast<double>(fam.w.rank());
    case PotentialKind::KSUnclamped:
      return fam.v.phi_ks_unclamped() - fam.w.phi_ks_unclamped();
    default:
      throw std::invalid_argument("wk_potential_drop supports Rank and KSUnclamped only");
  }
}

double wk_potential_drop(std::uint32_t k, PotentialKind kind) {
  return wk_potential_drop(build_wk(k), kind);
}

double wk_eq4_closed_form(std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("wk_eq4_closed_form needs k >= 2");
  if (k > 25) throw std::invalid_argument("wk_eq4_closed_form: k too large for exact products");
  const std::uint64_t a = (std::uint64_t{1} << (k + 2)) - 6;
  const std::uint64_t b = (std::uint64_t{1} << (k + 1)) - 4;
  const std::uint64_t c = (std::uint64_t{1} << (k + 2)) - 7;
  const std::uint64_t d = (std::uint64_t{1} << (k + 1)) - 1;
  return -1.0 + log_beta(static_cast<double>(a * b) / static_cast<double>(c * d));
}

}  // namespace heaplab
