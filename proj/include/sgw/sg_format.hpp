#pragma once

#include "sgw/signed_graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgw {

/// Thrown for malformed `.sg` text. `line` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The `.sg` format:
//
//   # comment
//   sg <n>
//   <u> <v> <s>        0 <= u < v < n, s in {+, -, 1, -1}
//
// Absent pairs are non-edges. serialize() writes edges sorted by (u, v)
// with `+`/`-` tokens.
SignedGraph parse_sg(std::string_view text);
SignedGraph read_sg(std::istream& in);
std::string serialize_sg(const SignedGraph& g);

}  // namespace sgw
