#include "heaplab/program.hpp"

#include <charconv>
#include <sstream>

namespace heaplab {

std::string Program::to_text() const {
  std::string out;
  for (const Instruction& ins : instructions) {
    switch (ins.op) {
      case Instruction::Op::MakeEmpty:
        out += "EMPTY r" + std::to_string(ins.dst);
        break;
      case Instruction::Op::MakeSingle:
        out += "SINGLE r" + std::to_string(ins.dst) + " " + std::to_string(ins.key);
        break;
      case Instruction::Op::Union:
        out += "UNION r" + std::to_string(ins.dst) + " r" + std::to_string(ins.src1) + " r" +
               std::to_string(ins.src2);
        break;
      case Instruction::Op::DelMin:
        out += "DELMIN r" + std::to_string(ins.dst) + " r" + std::to_string(ins.src1);
        break;
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
           line[j] != '#')
      ++j;
    toks.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

std::uint32_t parse_reg(const std::string& tok, std::size_t line_no) {
  if (tok.size() < 2 || tok[0] != 'r')
    throw ProgramParseError(line_no, "expected a register, got '" + tok + "'");
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ProgramParseError(line_no, "bad register '" + tok + "'");
  return v;
}

Key parse_key(const std::string& tok, std::size_t line_no) {
  Key v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ProgramParseError(line_no, "bad key '" + tok + "'");
  return v;
}

}  // namespace

Program Program::from_text(std::string_view text) {
  Program prog;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto toks = split_tokens(text.substr(start, end - start));
    start = end + 1;
    if (toks.empty()) {
      if (start > text.size()) break;
      continue;
    }
    const std::string& op = toks[0];
    auto want = [&](std::size_t n) {
      if (toks.size() != n + 1)
        throw ProgramParseError(line_no, op + " takes " + std::to_string(n) + " operands");
    };
    if (op == "EMPTY") {
      want(1);
      prog.instructions.push_back(Instruction::make_empty(parse_reg(toks[1], line_no)));
    } else if (op == "SINGLE") {
      want(2);
      prog.instructions.push_back(
          Instruction::make_single(parse_reg(toks[1], line_no), parse_key(toks[2], line_no)));
    } else if (op == "UNION") {
      want(3);
      prog.instructions.push_back(Instruction::make_union(parse_reg(toks[1], line_no),
                                                          parse_reg(toks[2], line_no),
                                                          parse_reg(toks[3], line_no)));
    } else if (op == "DELMIN") {
      want(2);
      prog.instructions.push_back(
          Instruction::make_del_min(parse_reg(toks[1], line_no), parse_reg(toks[2], line_no)));
    } else {
      throw ProgramParseError(line_no, "unknown instruction '" + op + "'");
    }
    if (start > text.size()) break;
  }
  return prog;
}

}  // namespace heaplab
