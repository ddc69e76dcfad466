#pragma once

#include <cstdint>

#include "heaplab/potentials.hpp"
#include "heaplab/tree.hpp"

namespace heaplab {

/// Perfect binary tree of height k with every node labeled a (empty for
/// k = 0). Built with full sharing: k node objects for 2^k - 1 nodes.
Tree perfect_tree(std::uint32_t k, Key a);

/// The near-worst-case rank-biased family:
///   T_2 = ((0),0,(2))          U_2 = (B_2^1,1,(1))
///   T_k = (B_k^0,0,T_{k-1})    U_k = (B_k^1,1,U_{k-1})
///   W_k = (T_k,0,U_k)          V_k = meld(T_k,U_k)   [rank-biased]
/// del_min(W_k) costs exactly 2k comparisons while the candidate potentials
/// barely drop.
struct WkFamily {
  std::uint32_t k = 0;
  Tree t;
  Tree u;
  Tree w;
  Tree v;
  std::uint64_t delmin_comparisons = 0;  // metered cost of del_min(W_k)
};

/// Builds the family for k >= 2 (throws std::invalid_argument below that).
WkFamily build_wk(std::uint32_t k);

/// Phi(V_k) - Phi(W_k) by direct tree evaluation. Supported kinds: Rank
/// (equals -1) and KSUnclamped (equals the closed form below); other kinds
/// are rejected.
double wk_potential_drop(const WkFamily& fam, PotentialKind kind);
double wk_potential_drop(std::uint32_t k, PotentialKind kind);

/// Closed form of the KS-unclamped drop:
///   -1 + log_beta( (2^{k+2}-6)(2^{k+1}-4) / ((2^{k+2}-7)(2^{k+1}-1)) ).
double wk_eq4_closed_form(std::uint32_t k);

}  // namespace heaplab
