#include "heaplab/tree.hpp"

#include <utility>
#include <vector>

#include "heaplab/node_terms.hpp"

namespace heaplab {

namespace {

std::uint64_t size_of(const NodePtr& n) { return n ? n->size : 0; }
std::uint64_t rank_of(const NodePtr& n) { return n ? n->rank : 0; }
double ksc_of(const NodePtr& n) { return n ? n->phi_ksc : 0.0; }
double ksu_of(const NodePtr& n) { return n ? n->phi_ksu : 0.0; }
double sti_of(const NodePtr& n) { return n ? n->phi_sti : 0.0; }

}  // namespace

Tree Tree::single(Key a) { return node(Tree(), a, Tree()); }

Tree Tree::node(const Tree& left, Key a, const Tree& right) {
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->key = a;
  n->size = size_of(n->left) + size_of(n->right) + 1;
  n->rank = rank_of(n->right) + 1;
  const std::uint64_t st = size_of(n->left) + 1;
  const std::uint64_t su = size_of(n->right) + 1;
  n->phi_ksc = ksc_of(n->left) + node_term_ks_clamped(st, su) + ksc_of(n->right);
  n->phi_ksu = ksu_of(n->left) + node_term_ks_unclamped(st, su) + ksu_of(n->right);
  n->phi_sti = sti_of(n->left) + node_term_st_indicator(st, su) + sti_of(n->right);
  return Tree(NodePtr(std::move(n)));
}

Key Tree::key() const {
  if (!node_) throw EmptyHeapError("key() on the empty heap");
  return node_->key;
}

Tree Tree::left() const { return node_ ? Tree(node_->left) : Tree(); }
Tree Tree::right() const { return node_ ? Tree(node_->right) : Tree(); }

std::uint64_t Tree::size() const { return size_of(node_); }
std::uint64_t Tree::rank() const { return rank_of(node_); }

double Tree::phi_ks_clamped() const { return ksc_of(node_); }
double Tree::phi_ks_unclamped() const { return ksu_of(node_); }
double Tree::phi_st_indicator() const { return sti_of(node_); }

bool operator==(const Tree& a, const Tree& b) {
  std::vector<std::pair<const Node*, const Node*>> stack;
  stack.emplace_back(a.node_.get(), b.node_.get());
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (p == q) continue;  // shared subtree or both empty
    if (!p || !q) return false;
    if (p->key != q->key || p->size != q->size || p->rank != q->rank) return false;
    stack.emplace_back(p->left.get(), q->left.get());
    stack.emplace_back(p->right.get(), q->right.get());
  }
  return true;
}

Node::~Node() {
  if (!left && !right) return;
  std::vector<NodePtr> stack;
  stack.reserve(2);
  if (left) stack.push_back(std::move(left));
  if (right) stack.push_back(std::move(right));
  while (!stack.empty()) {
    NodePtr p = std::move(stack.back());
    stack.pop_back();
    if (p.use_count() == 1) {
      // Sole owner: detach the children before p dies at scope end, so its
      // destructor sees leaves only and never recurses.
      auto* m = const_cast<Node*>(p.get());
      if (m->left) stack.push_back(std::move(m->left));
      if (m->right) stack.push_back(std::move(m->right));
    }
  }
}

}  // namespace heaplab
