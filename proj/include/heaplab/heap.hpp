#pragma once

#include <string>
#include <vector>

#include "heaplab/cost.hpp"
#include "heaplab/strategy.hpp"
#include "heaplab/tree.hpp"

namespace heaplab {

inline Tree empty() { return Tree(); }
inline Tree single(Key a) { return Tree::single(a); }
inline bool is_empty(const Tree& x) { return x.is_empty(); }

/// Minimum of the heap; the top element for the empty heap. Costs nothing.
inline ExtendedKey min_key(const Tree& x) {
  return x.is_empty() ? ExtendedKey::top() : ExtendedKey(x.key());
}

/// One balancing step on (t, a, u), which already satisfies the heap
/// property. Skew always swaps; the leftist rules keep (t,a,u) only when
/// the left side strictly dominates (ties swap); randomized swaps with
/// probability p. Performs no key comparisons.
Tree bal(const Tree& t, Key a, const Tree& u, Strategy& s, CostMeter& m);

/// Meld two heaps: exactly rank(x) + rank(y) key comparisons, counting the
/// comparisons against the empty-side sentinel. Implemented in the two-phase
/// iterative form (merge the right spines into an explicit path, then bal
/// bottom-up along it), which is comparison-for-comparison and draw-for-draw
/// identical to the recursive definition and safe for spines of length 10^6.
Tree meld(const Tree& x, const Tree& y, Strategy& s, CostMeter& m);

/// insert a x = meld (single a) x.
Tree insert(Key a, const Tree& x, Strategy& s, CostMeter& m);

/// Remove the minimum: meld of the two subtrees, costing rank(left) +
/// rank(right). Throws EmptyHeapError on the empty heap.
Tree del_min(const Tree& x, Strategy& s, CostMeter& m);

struct Violation {
  std::string path;  // "root" or a string of L/R steps from the root
  std::string what;
  std::string str() const { return what + " at " + path; }
};

/// Structural audit: heap property, size/rank cache consistency, and the
/// strategy's leftist condition (weight: size(left) >= size(right); rank:
/// rank(left) >= rank(right); skew/randomized: heap property only).
/// Empty result means valid.
std::vector<Violation> validate(const Tree& x, const Strategy& s);

}  // namespace heaplab
