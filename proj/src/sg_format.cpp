#include "sgw/sg_format.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace sgw {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

int to_sign(std::string_view tok, int line) {
  if (tok == "+" || tok == "1" || tok == "+1") return 1;
  if (tok == "-" || tok == "-1") return -1;
  throw ParseError(line, "invalid sign token '" + std::string(tok) + "'");
}

}  // namespace

SignedGraph parse_sg(std::string_view text) {
  std::optional<SignedGraph> g;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;

    auto toks = tokens(line);
    if (toks.empty() || toks[0].front() == '#') continue;

    if (!g) {
      if (toks.size() != 2 || toks[0] != "sg") throw ParseError(lineno, "expected header 'sg <n>'");
      const int n = to_int(toks[1], lineno, "order");
      if (n < 0) throw ParseError(lineno, "negative order");
      g.emplace(n);
      continue;
    }
    if (toks.size() != 3) throw ParseError(lineno, "expected 'u v s'");
    const int u = to_int(toks[0], lineno, "vertex");
    const int v = to_int(toks[1], lineno, "vertex");
    const int s = to_sign(toks[2], lineno);
    const int n = g->order();
    if (u == v) throw ParseError(lineno, "self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex out of range");
    if (u > v) throw ParseError(lineno, "edge must be written with u < v");
    if ((*g)(u, v) != 0) throw ParseError(lineno, "repeated edge");
    g->set_sign(u, v, s);
  }
  if (!g) throw ParseError(0, "missing header 'sg <n>'");
  return *std::move(g);
}

SignedGraph read_sg(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_sg(text);
}

std::string serialize_sg(const SignedGraph& g) {
  std::ostringstream out;
  out << "sg " << g.order() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  }
  return out.str();
}

}  // namespace sgw
