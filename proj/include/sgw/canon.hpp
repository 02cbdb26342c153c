#pragma once

#include "sgw/signed_graph.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace sgw {

/// Two-fold cover of a signed graph. Vertex 2v is (v,+), 2v+1 is (v,-).
/// A positive edge uv lifts to (u,+)(v,+) and (u,-)(v,-); a negative edge to
/// (u,+)(v,-) and (u,-)(v,+). Fiber pairs {(v,+),(v,-)} carry a second edge
/// color. Color-preserving isomorphisms of covers are exactly switching
/// isomorphisms of the base graphs.
struct MatchedDoubleCover {
  enum EdgeColor : std::uint8_t { kNone = 0, kCover = 1, kFiber = 2 };

  int base_n = 0;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> color;

  int vertex_count() const { return 2 * base_n; }
  int cover_edge_count() const;
  int fiber_count() const;
};

MatchedDoubleCover double_cover(const SignedGraph& g);

/// Byte string identifying a switching-isomorphism class.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  static CanonicalCode from_hex(std::string_view hex);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Packs the sign matrix verbatim: one order byte, then the upper triangle in
/// row-major order at two bits per entry (0 none, 1 positive, 2 negative).
CanonicalCode encode(const SignedGraph& g);
SignedGraph decode(const CanonicalCode& code);

/// Canonical representative of the switching-isomorphism class of `g`,
/// computed by individualization-refinement on the matched double cover.
SignedGraph canonical_form(const SignedGraph& g);

/// encode(canonical_form(g)).
CanonicalCode canonical_code(const SignedGraph& g);

bool switching_isomorphic(const SignedGraph& g, const SignedGraph& h);

/// Switching isomorphic to its own negative.
bool is_sign_symmetric(const SignedGraph& g);

struct CanonStats {
  long long nodes = 0;
  long long leaves = 0;
  long long automorphisms = 0;
};

/// canonical_form with search statistics, for diagnostics.
SignedGraph canonical_form(const SignedGraph& g, CanonStats* stats);

}  // namespace sgw

template <>
struct std::hash<sgw::CanonicalCode> {
  std::size_t operator()(const sgw::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
