#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "heaplab/tree.hpp"

namespace heaplab {

/// One heap-building instruction over numbered registers. Registers are
/// linear: written once, read at most once.
struct Instruction {
  enum class Op { MakeEmpty, MakeSingle, Union, DelMin };
  Op op = Op::MakeEmpty;
  std::uint32_t dst = 0;
  std::uint32_t src1 = 0;
  std::uint32_t src2 = 0;
  Key key = 0;

  static Instruction make_empty(std::uint32_t dst) { return {Op::MakeEmpty, dst, 0, 0, 0}; }
  static Instruction make_single(std::uint32_t dst, Key a) { return {Op::MakeSingle, dst, 0, 0, a}; }
  static Instruction make_union(std::uint32_t dst, std::uint32_t s1, std::uint32_t s2) {
    return {Op::Union, dst, s1, s2, 0};
  }
  static Instruction make_del_min(std::uint32_t dst, std::uint32_t src) {
    return {Op::DelMin, dst, src, 0, 0};
  }
};

class ProgramParseError : public std::runtime_error {
 public:
  ProgramParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A replayable instruction sequence. Text form, one instruction per line:
///   EMPTY r0
///   SINGLE r0 5
///   UNION r2 r0 r1
///   DELMIN r1 r0
/// '#' starts a comment; blank lines are skipped.
struct Program {
  std::vector<Instruction> instructions;

  bool empty() const { return instructions.empty(); }
  std::size_t size() const { return instructions.size(); }

  std::string to_text() const;
  static Program from_text(std::string_view text);
};

}  // namespace heaplab
