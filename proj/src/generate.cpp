#include "heaplab/generate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace heaplab {

namespace {

// Recursive split over a sorted key range: the range minimum becomes the
// root, the rest is divided between the subtrees. Weight-biased picks a
// dominant left share up front; rank-biased builds both sides and swaps
// children when the built ranks disobey the leftist condition (swapping
// keeps the heap property and has no size constraint to break).
Tree build(StrategyKind kind, const std::vector<Key>& keys, std::size_t lo, std::size_t hi,
           SplitMix64& rng) {
  if (lo == hi) return Tree();
  const Key a = keys[lo];
  const std::size_t rest = hi - lo - 1;
  std::size_t n_left = 0;
  if (rest > 0) {
    if (kind == StrategyKind::WeightBiased) {
      const std::size_t min_left = (rest + 1) / 2;
      n_left = min_left + static_cast<std::size_t>(rng.next_below(rest - min_left + 1));
    } else {
      n_left = static_cast<std::size_t>(rng.next_below(rest + 1));
    }
  }
  Tree l = build(kind, keys, lo + 1, lo + 1 + n_left, rng);
  Tree r = build(kind, keys, lo + 1 + n_left, hi, rng);
  if (kind == StrategyKind::RankBiased && l.rank() < r.rank()) std::swap(l, r);
  return Tree::node(l, a, r);
}

}  // namespace

Tree random_heap(StrategyKind kind, std::uint64_t n, SplitMix64& rng, Key key_lo, Key key_hi) {
  std::vector<Key> keys;
  keys.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) keys.push_back(rng.next_in_range(key_lo, key_hi));
  std::sort(keys.begin(), keys.end());
  return build(kind, keys, 0, keys.size(), rng);
}

std::uint64_t log_uniform_size(SplitMix64& rng, std::uint64_t cap) {
  if (cap <= 1) return cap;
  const double u = rng.next_double();
  const auto n = static_cast<std::uint64_t>(std::exp(u * std::log(static_cast<double>(cap))));
  return std::clamp<std::uint64_t>(n, 1, cap);
}

}  // namespace heaplab
