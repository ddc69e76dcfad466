#include "heaplab/heap.hpp"

#include <utility>
#include <vector>

namespace heaplab {

const char* strategy_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::Skew: return "skew";
    case StrategyKind::WeightBiased: return "weight-biased";
    case StrategyKind::RankBiased: return "rank-biased";
    case StrategyKind::Randomized: return "randomized";
  }
  return "?";
}

Tree bal(const Tree& t, Key a, const Tree& u, Strategy& s, CostMeter& m) {
  bool keep = false;
  switch (s.kind()) {
    case StrategyKind::Skew:
      keep = false;
      break;
    case StrategyKind::WeightBiased:
      ++m.structural;
      keep = s.tie_break() == TieBreak::KeepOnTie ? t.size() >= u.size()
                                                  : t.size() > u.size();
      break;
    case StrategyKind::RankBiased:
      ++m.structural;
      keep = s.tie_break() == TieBreak::KeepOnTie ? t.rank() >= u.rank()
                                                  : t.rank() > u.rank();
      break;
    case StrategyKind::Randomized:
      ++m.structural;
      keep = !(s.next_draw() < s.p());
      break;
  }
  return keep ? Tree::node(t, a, u) : Tree::node(u, a, t);
}

Tree meld(const Tree& x, const Tree& y, Strategy& s, CostMeter& m) {
  // Phase 1: merge the right spines. Each round consumes one spine node and
  // costs one comparison; a round against an empty side is the comparison
  // with the sentinel and still counts.
  std::vector<std::pair<Tree, Key>> path;
  path.reserve(static_cast<std::size_t>(x.rank() + y.rank()));
  Tree a = x;
  Tree b = y;
  while (!a.is_empty() || !b.is_empty()) {
    ++m.comparisons;
    const bool first_wins = b.is_empty() || (!a.is_empty() && a.key() <= b.key());
    if (first_wins) {
      path.emplace_back(a.left(), a.key());
      a = a.right();
    } else {
      path.emplace_back(b.left(), b.key());
      b = b.right();
    }
  }
  // Phase 2: bal bottom-up along the merged path, innermost step first,
  // exactly as the recursive unfolding would.
  Tree acc;
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    acc = bal(it->first, it->second, acc, s, m);
  return acc;
}

Tree insert(Key a, const Tree& x, Strategy& s, CostMeter& m) {
  return meld(single(a), x, s, m);
}

Tree del_min(const Tree& x, Strategy& s, CostMeter& m) {
  if (x.is_empty()) throw EmptyHeapError("del_min on the empty heap");
  return meld(x.left(), x.right(), s, m);
}

namespace {

struct AuditItem {
  const Node* node;
  std::int64_t parent;  // index into the visit order, -1 for the root
  char dir;
};

std::string path_of(const std::vector<AuditItem>& items, std::int64_t i) {
  std::string rev;
  while (items[static_cast<std::size_t>(i)].parent >= 0) {
    rev.push_back(items[static_cast<std::size_t>(i)].dir);
    i = items[static_cast<std::size_t>(i)].parent;
  }
  if (rev.empty()) return "root";
  return std::string(rev.rbegin(), rev.rend());
}

}  // namespace

std::vector<Violation> validate(const Tree& x, const Strategy& s) {
  std::vector<Violation> out;
  if (x.is_empty()) return out;

  const bool check_weight = s.kind() == StrategyKind::WeightBiased;
  const bool check_rank = s.kind() == StrategyKind::RankBiased;

  std::vector<AuditItem> items;
  items.push_back({x.id(), -1, '-'});
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Node* n = items[i].node;
    const Node* l = n->left.get();
    const Node* r = n->right.get();
    const std::uint64_t lsize = l ? l->size : 0, rsize = r ? r->size : 0;
    const std::uint64_t lrank = l ? l->rank : 0, rrank = r ? r->rank : 0;
    auto report = [&](const char* what) {
      out.push_back({path_of(items, static_cast<std::int64_t>(i)), what});
    };
    if (l && l->key < n->key) report("heap violation (left child smaller)");
    if (r && r->key < n->key) report("heap violation (right child smaller)");
    if (n->size != lsize + rsize + 1) report("size cache violation");
    if (n->rank != rrank + 1) report("rank cache violation");
    if (check_weight && lsize < rsize) report("weight violation");
    if (check_rank && lrank < rrank) report("rank violation");
    if (l) items.push_back({l, static_cast<std::int64_t>(i), 'L'});
    if (r) items.push_back({r, static_cast<std::int64_t>(i), 'R'});
  }
  return out;
}

}  // namespace heaplab
