#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "heaplab/tree.hpp"

namespace heaplab {

class TreeParseError : public std::runtime_error {
 public:
  TreeParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Canonical text form: empty = "()", node = "(L k R)" with exactly one
/// space between fields, e.g. "((() 2 ()) 1 ())".
std::string to_text(const Tree& x);

/// Whitespace-insensitive parser for the canonical form.
Tree tree_from_text(std::string_view text);

}  // namespace heaplab
