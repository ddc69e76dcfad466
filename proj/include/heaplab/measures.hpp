#pragma once

#include <cstdint>

#include "heaplab/tree.hpp"

namespace heaplab {

/// rank: length of the rightmost path. Cached at every node.
inline std::uint64_t rank_of(const Tree& x) { return x.rank(); }

/// Minor rank: prank(empty) = 0, prank(t,a,u) = rank(t) + 1.
inline std::uint64_t prank_of(const Tree& x) {
  return x.is_empty() ? 0 : x.left().rank() + 1;
}

inline std::uint64_t size_of(const Tree& x) { return x.size(); }
inline std::uint64_t sz_of(const Tree& x) { return x.sz(); }

/// Rightmost-path length recomputed by walking the spine (ignores caches).
std::uint64_t spine_rank(const Tree& x);

/// Node count recomputed by full traversal (ignores caches).
std::uint64_t recount_size(const Tree& x);

/// 2^rank <= sz, the integer form of the leftist rank bound.
bool rank_log_bound_holds(const Tree& x);

struct MeasureReport {
  std::uint64_t rank = 0;
  std::uint64_t prank = 0;
  std::uint64_t size = 0;
  std::uint64_t sz = 1;
  double log2_sz = 0.0;
  double log_phi_sz = 0.0;
};

MeasureReport measure(const Tree& x);

/// The four meld interaction laws for rank and minor rank on rank-biased
/// heaps. The paper states them without proof; this is the empirical check.
struct Lemma2Report {
  bool rank_le_prank_le_log = false;         // (i) on both inputs
  bool rank_meld_between = false;            // (ii)
  bool rank_meld_le_max_prank = false;       // (iii)
  bool prank_meld_between = false;           // (iv)
  bool all() const {
    return rank_le_prank_le_log && rank_meld_between && rank_meld_le_max_prank &&
           prank_meld_between;
  }
};

/// Melds x and y under the rank-biased strategy and evaluates Lemma 2.
/// Inputs must be valid rank-biased heaps.
Lemma2Report check_lemma2(const Tree& x, const Tree& y);

}  // namespace heaplab
