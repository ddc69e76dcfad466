#include "heaplab/reachability.hpp"

#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "heaplab/cost.hpp"
#include "heaplab/heap.hpp"

namespace heaplab {

namespace {

void require_rank_biased(const Tree& x, const char* who) {
  Strategy s = Strategy::rank_biased();
  const auto violations = validate(x, s);
  if (!violations.empty())
    throw InvalidHeapError(std::string(who) + ": input is not a valid rank-biased heap (" +
                           violations.front().str() + ")");
}

Tree preimage_unchecked(const Tree& x) {
  // Collect the spine of the preimage: rank-tie steps descend into the left
  // subtree carrying the right one, strict steps descend right carrying the
  // left one. Iterative so left-degenerate heaps cannot exhaust the stack.
  std::vector<std::pair<Tree, Key>> spine;
  Tree cur = x;
  while (!cur.is_empty()) {
    const Tree t = cur.left();
    const Tree u = cur.right();
    if (t.rank() == u.rank()) {
      spine.emplace_back(u, cur.key());
      cur = t;
    } else {
      spine.emplace_back(t, cur.key());
      cur = u;
    }
  }
  Tree y;
  for (auto it = spine.rbegin(); it != spine.rend(); ++it)
    y = Tree::node(it->first, it->second, y);
  return y;
}

class Compiler {
 public:
  Program take() && { return std::move(prog_); }

  std::uint32_t compile(const Tree& x) {
    if (x.is_empty()) return emit_empty();
    const Tree t = x.left();
    const Tree u = x.right();
    if (t.is_empty() && u.is_empty()) return emit_single(x.key());
    std::uint32_t r1 = 0, r2 = 0;
    if (u.is_empty()) {
      // x = (t,a,()) would be its own "generate (t,a,()) first" step; meld
      // a fresh single against the preimage of t instead:
      // meld((a), y) = bal((),a,t) = (t,a,()) by the tie-break swap.
      r1 = emit_single(x.key());
      r2 = compile(preimage_unchecked(t));
    } else if (t.rank() == u.rank()) {
      r1 = compile(Tree::node(u, x.key(), Tree()));
      r2 = compile(preimage_unchecked(t));
    } else {
      r1 = compile(Tree::node(t, x.key(), Tree()));
      r2 = compile(preimage_unchecked(u));
    }
    const std::uint32_t r = next_++;
    prog_.instructions.push_back(Instruction::make_union(r, r1, r2));
    return r;
  }

 private:
  std::uint32_t emit_empty() {
    const std::uint32_t r = next_++;
    prog_.instructions.push_back(Instruction::make_empty(r));
    return r;
  }
  std::uint32_t emit_single(Key a) {
    const std::uint32_t r = next_++;
    prog_.instructions.push_back(Instruction::make_single(r, a));
    return r;
  }

  Program prog_;
  std::uint32_t next_ = 0;
};

}  // namespace

Tree preimage(const Tree& x) {
  require_rank_biased(x, "preimage");
  return preimage_unchecked(x);
}

Program compile_generation(const Tree& x) {
  require_rank_biased(x, "compile_generation");
  Compiler c;
  c.compile(x);
  return std::move(c).take();
}

ReplayResult replay(const Program& p, Strategy s) {
  std::unordered_map<std::uint32_t, Tree> live;
  std::unordered_set<std::uint32_t> written;
  CostMeter m;
  Tree last;
  auto read = [&](std::uint32_t reg, std::size_t idx) {
    auto it = live.find(reg);
    if (it == live.end()) {
      const bool seen = written.count(reg) != 0;
      throw ReplayError(idx, "register r" + std::to_string(reg) +
                                 (seen ? " read twice" : " read before write"));
    }
    Tree t = std::move(it->second);
    live.erase(it);
    return t;
  };
  auto write = [&](std::uint32_t reg, Tree t, std::size_t idx) {
    if (!written.insert(reg).second)
      throw ReplayError(idx, "register r" + std::to_string(reg) + " written twice");
    live.emplace(reg, t);
    last = std::move(t);
  };
  for (std::size_t i = 0; i < p.instructions.size(); ++i) {
    const Instruction& ins = p.instructions[i];
    switch (ins.op) {
      case Instruction::Op::MakeEmpty:
        write(ins.dst, Tree(), i);
        break;
      case Instruction::Op::MakeSingle:
        write(ins.dst, single(ins.key), i);
        break;
      case Instruction::Op::Union: {
        Tree a = read(ins.src1, i);
        Tree b = read(ins.src2, i);
        write(ins.dst, meld(a, b, s, m), i);
        break;
      }
      case Instruction::Op::DelMin: {
        Tree a = read(ins.src1, i);
        if (a.is_empty()) throw ReplayError(i, "DELMIN on an empty register");
        write(ins.dst, del_min(a, s, m), i);
        break;
      }
    }
  }
  return {std::move(last), m.comparisons};
}

}  // namespace heaplab
