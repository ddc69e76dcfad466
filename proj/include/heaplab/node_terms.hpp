#pragma once

#include <algorithm>
#include <cstdint>

#include "heaplab/constants.hpp"

namespace heaplab {

// Per-node potential terms as functions of (sz of left subtree, sz of right
// subtree). Shared by the tree constructor, which caches subtree sums, and
// by the public node_potential front end.

inline double node_term_ks_unclamped(std::uint64_t sz_t, std::uint64_t sz_u) {
  return log_beta(kBeta * static_cast<double>(sz_u) /
                  (static_cast<double>(sz_t) + static_cast<double>(sz_u)));
}

inline double node_term_ks_clamped(std::uint64_t sz_t, std::uint64_t sz_u) {
  return std::max(node_term_ks_unclamped(sz_t, sz_u), 0.0);
}

inline double node_term_st_indicator(std::uint64_t sz_t, std::uint64_t sz_u) {
  return sz_t < sz_u ? 1.0 : 0.0;
}

}  // namespace heaplab
