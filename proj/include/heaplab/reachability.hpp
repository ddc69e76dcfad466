#pragma once

#include <cstdint>
#include <stdexcept>

#include "heaplab/program.hpp"
#include "heaplab/strategy.hpp"
#include "heaplab/tree.hpp"

namespace heaplab {

/// Input failed the rank-biased validity audit.
class InvalidHeapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Replay hit a malformed program: register reused, read before write, or
/// del_min on an empty register. Carries the offending instruction index.
class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t index, const std::string& what)
      : std::runtime_error("instruction " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// The meld preimage: a rank-biased heap y with meld((), y) = x, built by
/// the tie-break-aware construction (rank(t) = rank(u) descends left,
/// rank(t) > rank(u) descends right). x must be a valid rank-biased heap.
Tree preimage(const Tree& x);

/// Compiles x into a generating program over EMPTY/SINGLE/UNION whose
/// rank-biased replay reproduces x node for node. Registers are dense and
/// assigned in emission (post-order) order.
Program compile_generation(const Tree& x);

struct ReplayResult {
  Tree tree;  // contents of the last instruction's destination register
  std::uint64_t comparisons = 0;
};

/// Executes a program under the given strategy, enforcing register
/// linearity. The strategy is taken by value: a replay owns its draw
/// stream and its meter.
ReplayResult replay(const Program& p, Strategy s);

}  // namespace heaplab
