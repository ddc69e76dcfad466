#include "heaplab/golden.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "heaplab/constants.hpp"

namespace heaplab {

GSeq::GSeq(std::uint64_t n_max) {
  if (n_max >= 0xFFFFFFFFull) throw std::invalid_argument("GSeq table too large");
  l_.resize(n_max + 1);
  l_[0] = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n)
    l_[n] = static_cast<std::uint32_t>(n - l_[l_[n - 1]]);
}

ShapeTree ShapeTree::branch(const ShapeTree& left, const ShapeTree& right) {
  auto n = std::make_shared<ShapeNode>();
  n->left = left.node_;
  n->right = right.node_;
  n->size = left.size() + right.size() + 1;
  n->rank = right.rank() + 1;
  return ShapeTree(ShapeNodePtr(std::move(n)));
}

ShapeTree ShapeTree::left() const { return node_ ? ShapeTree(node_->left) : ShapeTree(); }
ShapeTree ShapeTree::right() const { return node_ ? ShapeTree(node_->right) : ShapeTree(); }
std::uint64_t ShapeTree::size() const { return node_ ? node_->size : 0; }
std::uint64_t ShapeTree::rank() const { return node_ ? node_->rank : 0; }

bool operator==(const ShapeTree& a, const ShapeTree& b) {
  std::vector<std::pair<const ShapeNode*, const ShapeNode*>> stack;
  stack.emplace_back(a.node_.get(), b.node_.get());
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (p == q) continue;
    if (!p || !q) return false;
    if (p->size != q->size || p->rank != q->rank) return false;
    stack.emplace_back(p->left.get(), q->left.get());
    stack.emplace_back(p->right.get(), q->right.get());
  }
  return true;
}

ShapeNode::~ShapeNode() {
  if (!left && !right) return;
  std::vector<ShapeNodePtr> stack;
  if (left) stack.push_back(std::move(left));
  if (right) stack.push_back(std::move(right));
  while (!stack.empty()) {
    ShapeNodePtr p = std::move(stack.back());
    stack.pop_back();
    if (p.use_count() == 1) {
      auto* m = const_cast<ShapeNode*>(p.get());
      if (m->left) stack.push_back(std::move(m->left));
      if (m->right) stack.push_back(std::move(m->right));
    }
  }
}

std::string shape_to_text(const ShapeTree& x) {
  std::string out;
  struct Frame {
    const ShapeNode* node;
    int stage;
  };
  std::vector<Frame> frames;
  frames.push_back({x.id(), 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (!f.node) {
      out += "()";
      frames.pop_back();
      continue;
    }
    if (f.stage == 0) {
      out.push_back('(');
      f.stage = 1;
      frames.push_back({f.node->left.get(), 0});
    } else if (f.stage == 1) {
      out.push_back(' ');
      f.stage = 2;
      frames.push_back({f.node->right.get(), 0});
    } else {
      out.push_back(')');
      frames.pop_back();
    }
  }
  return out;
}

UnlabeledMeldResult unlabeled_meld(const ShapeTree& x, const ShapeTree& y) {
  std::vector<ShapeTree> winners;
  winners.reserve(static_cast<std::size_t>(x.rank() + y.rank()));
  ShapeTree a = x;
  ShapeTree b = y;
  std::uint64_t steps = 0;
  while (!a.is_leaf() || !b.is_leaf()) {
    ++steps;
    if (!a.is_leaf()) {
      winners.push_back(a.left());
      ShapeTree next_b = a.right();
      a = b;
      b = std::move(next_b);
    } else {
      winners.push_back(b.left());
      b = b.right();
    }
  }
  ShapeTree acc;
  for (auto it = winners.rbegin(); it != winners.rend(); ++it)
    acc = ShapeTree::branch(acc, *it);
  return {std::move(acc), steps};
}

GoldenTrees::GoldenTrees(std::uint64_t n_max, std::uint64_t materialize_max) : g_(n_max) {
  if (materialize_max > n_max) materialize_max = n_max;
  rank_.resize(n_max + 1);
  weight_ok_.resize(n_max + 1);
  rank_ok_.resize(n_max + 1);
  rank_[0] = 0;
  weight_ok_[0] = rank_ok_[0] = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::uint64_t lo = g_.l(n - 1), ro = g_.r(n - 1);
    rank_[n] = rank_[ro] + 1;
    weight_ok_[n] = static_cast<std::uint8_t>(lo >= ro && weight_ok_[lo] && weight_ok_[ro]);
    rank_ok_[n] =
        static_cast<std::uint8_t>(rank_[lo] >= rank_[ro] && rank_ok_[lo] && rank_ok_[ro]);
  }
  trees_.reserve(materialize_max + 1);
  trees_.emplace_back();  // G_0
  for (std::uint64_t n = 1; n <= materialize_max; ++n)
    trees_.push_back(ShapeTree::branch(trees_[g_.l(n - 1)], trees_[g_.r(n - 1)]));
}

const ShapeTree& GoldenTrees::tree(std::uint64_t n) const {
  if (n >= trees_.size())
    throw std::out_of_range("golden tree order beyond the materialized range");
  return trees_[n];
}

GoldenLeftistReport GoldenTrees::check_leftist(std::uint64_t n) const {
  return {weight_ok_.at(n) != 0, rank_ok_.at(n) != 0};
}

double GoldenTrees::theorem2_gap(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("theorem2_gap needs n >= 1");
  const double cost = static_cast<double>(rank_.at(g_.l(n)) + rank_.at(g_.r(n)));
  return cost - (log_phi(static_cast<double>(n + 1)) - 2.0);
}

}  // namespace heaplab
