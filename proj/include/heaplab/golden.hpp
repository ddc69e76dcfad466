#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace heaplab {

/// Hofstadter's G-sequence, memoized as a flat table:
/// L(0) = 0, L(n) = n - L(L(n-1)); R(n) = n - L(n).
class GSeq {
 public:
  explicit GSeq(std::uint64_t n_max);

  std::uint64_t l(std::uint64_t n) const { return l_.at(n); }
  std::uint64_t r(std::uint64_t n) const { return n - l_.at(n); }
  std::uint64_t n_max() const { return l_.size() - 1; }

 private:
  std::vector<std::uint32_t> l_;
};

struct ShapeNode;
using ShapeNodePtr = std::shared_ptr<const ShapeNode>;

/// Unlabeled binary tree with cached size and rank; the default value is
/// the empty tree (a leaf). Same value semantics and sharing as Tree.
class ShapeTree {
 public:
  ShapeTree() = default;
  static ShapeTree branch(const ShapeTree& left, const ShapeTree& right);

  bool is_leaf() const { return !node_; }
  ShapeTree left() const;
  ShapeTree right() const;
  std::uint64_t size() const;
  std::uint64_t rank() const;
  const ShapeNode* id() const { return node_.get(); }

  friend bool operator==(const ShapeTree& a, const ShapeTree& b);
  friend bool operator!=(const ShapeTree& a, const ShapeTree& b) { return !(a == b); }

 private:
  explicit ShapeTree(ShapeNodePtr n) : node_(std::move(n)) {}
  ShapeNodePtr node_;
};

struct ShapeNode {
  ShapeNodePtr left;
  ShapeNodePtr right;
  std::uint64_t size = 0;
  std::uint64_t rank = 0;
  ~ShapeNode();
};

/// "(L R)" text form, leaves as "()"; used by tables and tests.
std::string shape_to_text(const ShapeTree& x);

struct UnlabeledMeldResult {
  ShapeTree tree;
  std::uint64_t steps = 0;  // one per unfolding of a not-both-leaf pair
};

/// The key-free meld of the lower-bound argument:
///   meld((),()) = (),  meld((t,u), y) = (meld(y,u), t),
/// completed symmetrically when the first side empties first. Step count
/// equals rank(x) + rank(y), the same law as the labeled meter.
UnlabeledMeldResult unlabeled_meld(const ShapeTree& x, const ShapeTree& y);

struct GoldenLeftistReport {
  bool weight_ok = false;  // size(left) >= size(right) at every node
  bool rank_ok = false;    // rank(left) >= rank(right) at every node
};

/// Golden trees G_n: G_0 = (), G_n = (G_{L(n-1)}, G_{R(n-1)}). Orders up to
/// materialize_max are built as ShapeTrees (with full sharing: one node per
/// order); above that only the (size, rank) recurrences are tabulated, up
/// to n_max.
class GoldenTrees {
 public:
  explicit GoldenTrees(std::uint64_t n_max = 1'000'000,
                       std::uint64_t materialize_max = 10'000);

  const GSeq& gseq() const { return g_; }
  std::uint64_t n_max() const { return g_.n_max(); }
  std::uint64_t materialize_max() const { return trees_.size() - 1; }

  /// G_n as a tree; n must be <= materialize_max.
  const ShapeTree& tree(std::uint64_t n) const;
  /// rank(G_n) from the memo table.
  std::uint64_t rank(std::uint64_t n) const { return rank_.at(n); }

  /// Leftist conditions at every node of G_n (order-closure memo).
  GoldenLeftistReport check_leftist(std::uint64_t n) const;

  /// rank(G_{L(n)}) + rank(G_{R(n)}) - (log_phi(n+1) - 2), the margin by
  /// which the self-recreating meld respects the amortized lower bound.
  double theorem2_gap(std::uint64_t n) const;

 private:
  GSeq g_;
  std::vector<ShapeTree> trees_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint8_t> weight_ok_;  // closure flags per order
  std::vector<std::uint8_t> rank_ok_;
};

}  // namespace heaplab
