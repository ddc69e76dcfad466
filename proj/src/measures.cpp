#include "heaplab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "heaplab/constants.hpp"
#include "heaplab/heap.hpp"

namespace heaplab {

std::uint64_t spine_rank(const Tree& x) {
  std::uint64_t n = 0;
  for (Tree t = x; !t.is_empty(); t = t.right()) ++n;
  return n;
}

std::uint64_t recount_size(const Tree& x) {
  std::uint64_t n = 0;
  std::vector<const Node*> stack;
  if (x.id()) stack.push_back(x.id());
  while (!stack.empty()) {
    const Node* p = stack.back();
    stack.pop_back();
    ++n;
    if (p->left) stack.push_back(p->left.get());
    if (p->right) stack.push_back(p->right.get());
  }
  return n;
}

bool rank_log_bound_holds(const Tree& x) {
  const std::uint64_t r = x.rank();
  if (r >= 64) return false;  // sz < 2^64 <= 2^rank
  return (std::uint64_t{1} << r) <= x.sz();
}

MeasureReport measure(const Tree& x) {
  MeasureReport rep;
  rep.rank = rank_of(x);
  rep.prank = prank_of(x);
  rep.size = size_of(x);
  rep.sz = sz_of(x);
  rep.log2_sz = std::log2(static_cast<double>(rep.sz));
  rep.log_phi_sz = log_phi(static_cast<double>(rep.sz));
  return rep;
}

namespace {

// prank <= log2(sz) + 1, checked in integers: 2^(prank-1) <= sz.
bool prank_log_bound_holds(const Tree& x) {
  const std::uint64_t pr = prank_of(x);
  if (pr == 0) return true;
  if (pr - 1 >= 64) return false;
  return (std::uint64_t{1} << (pr - 1)) <= x.sz();
}

}  // namespace

Lemma2Report check_lemma2(const Tree& x, const Tree& y) {
  Strategy s = Strategy::rank_biased();
  CostMeter m;
  const Tree z = meld(x, y, s, m);

  const std::uint64_t rx = rank_of(x), ry = rank_of(y), rz = rank_of(z);
  const std::uint64_t px = prank_of(x), py = prank_of(y), pz = prank_of(z);

  Lemma2Report rep;
  rep.rank_le_prank_le_log = rx <= px && prank_log_bound_holds(x) &&
                             ry <= py && prank_log_bound_holds(y);
  rep.rank_meld_between = std::min(rx, ry) <= rz && rz <= rx + ry;
  rep.rank_meld_le_max_prank = rz <= std::max(px, py);
  rep.prank_meld_between = std::min(px, py) <= pz && pz <= px + py;
  return rep;
}

}  // namespace heaplab
