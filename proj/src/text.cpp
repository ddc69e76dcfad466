#include "heaplab/text.hpp"

#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

namespace heaplab {

std::string to_text(const Tree& x) {
  // Explicit frame stack; trees can be arbitrarily deep.
  std::string out;
  struct Frame {
    const Node* node;
    int stage;  // 0: "(" + left; 1: " key " + right; 2: ")"
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
      out += std::to_string(f.node->key);
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

Tree tree_from_text(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void { throw TreeParseError(pos, what); };

  struct Frame {
    int stage = 0;  // 0: expect left; 1: expect key; 2: expect right; 3: expect ')'
    Tree left;
    Key key = 0;
  };
  std::vector<Frame> frames;
  Tree result;
  bool have_result = false;

  auto deliver = [&](Tree t) {
    if (frames.empty()) {
      result = std::move(t);
      have_result = true;
      return;
    }
    Frame& f = frames.back();
    if (f.stage == 0) {
      f.left = std::move(t);
      f.stage = 1;
    } else if (f.stage == 2) {
      f.left = Tree::node(f.left, f.key, t);  // completed node parked until ')'
      f.stage = 3;
    } else {
      fail("unexpected subtree");
    }
  };

  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        deliver(Tree());
      } else {
        frames.push_back({});
      }
    } else if (c == ')') {
      if (frames.empty()) fail("unmatched ')'");
      if (frames.back().stage != 3) fail("incomplete node before ')'");
      Tree done = std::move(frames.back().left);
      frames.pop_back();
      ++pos;
      deliver(std::move(done));
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      if (frames.empty() || frames.back().stage != 1) fail("key outside a node");
      std::size_t end = pos + 1;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      Key k = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, k);
      if (ec != std::errc() || ptr != text.data() + end) fail("bad key");
      pos = end;
      frames.back().key = k;
      frames.back().stage = 2;
    } else {
      fail("unexpected character");
    }
    if (have_result) {
      skip_ws();
      if (pos < text.size()) fail("trailing input");
      break;
    }
  }
  if (!have_result) fail(frames.empty() ? "empty input" : "unterminated tree");
  return result;
}

}  // namespace heaplab
