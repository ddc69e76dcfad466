#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>

namespace heaplab {

using Key = std::int64_t;

/// Thrown by operations that require a non-empty heap (del_min underflow,
/// root accessors). Distinct from contract violations, which are the
/// caller's problem and only caught by validate().
class EmptyHeapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Key extended with a top element: the minimum of the empty heap.
/// Top is strictly greater than every Key and equal to itself.
class ExtendedKey {
 public:
  constexpr ExtendedKey() : top_(true), key_(0) {}
  constexpr explicit ExtendedKey(Key a) : top_(false), key_(a) {}
  static constexpr ExtendedKey top() { return ExtendedKey(); }

  constexpr bool is_top() const { return top_; }
  Key key() const {
    if (top_) throw EmptyHeapError("key() on the top element");
    return key_;
  }

  friend constexpr bool operator==(ExtendedKey a, ExtendedKey b) {
    return a.top_ == b.top_ && (a.top_ || a.key_ == b.key_);
  }
  friend constexpr bool operator<(ExtendedKey a, ExtendedKey b) {
    if (a.top_) return false;
    if (b.top_) return true;
    return a.key_ < b.key_;
  }
  friend constexpr bool operator<=(ExtendedKey a, ExtendedKey b) { return !(b < a); }
  friend constexpr bool operator>(ExtendedKey a, ExtendedKey b) { return b < a; }
  friend constexpr bool operator>=(ExtendedKey a, ExtendedKey b) { return !(a < b); }

 private:
  bool top_;
  Key key_;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable binary heap tree. Every node caches its size (node count), its
/// rank (length of the rightmost path) and the subtree sums of the three
/// node potentials, so all measures and potentials read in O(1). Trees are
/// values: never mutated after construction, structural sharing throughout.
class Tree {
 public:
  Tree() = default;  // the empty tree

  static Tree single(Key a);
  /// Raw node constructor (heap property is the caller's contract).
  static Tree node(const Tree& left, Key a, const Tree& right);

  bool is_empty() const { return !node_; }
  explicit operator bool() const { return static_cast<bool>(node_); }

  Key key() const;    // throws EmptyHeapError on the empty tree
  Tree left() const;  // empty tree on the empty tree
  Tree right() const;

  std::uint64_t size() const;
  std::uint64_t rank() const;
  std::uint64_t sz() const { return size() + 1; }

  double phi_ks_clamped() const;
  double phi_ks_unclamped() const;
  double phi_st_indicator() const;

  /// Node identity, for memo tables and sharing checks. Null when empty.
  const Node* id() const { return node_.get(); }

  /// Structural equality: same shape and keys, node for node.
  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

 private:
  explicit Tree(NodePtr n) : node_(std::move(n)) {}
  NodePtr node_;
};

struct Node {
  NodePtr left;
  NodePtr right;
  Key key = 0;
  std::uint64_t size = 0;
  std::uint64_t rank = 0;
  double phi_ksc = 0.0;
  double phi_ksu = 0.0;
  double phi_sti = 0.0;

  // Iterative teardown: right spines are linear in n for skew heaps, so the
  // default recursive destruction would overflow the stack on large inputs.
  ~Node();
};

}  // namespace heaplab
