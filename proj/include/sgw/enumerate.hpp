#pragma once

#include "sgw/canon.hpp"
#include "sgw/families.hpp"
#include "sgw/signed_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgw {

/// True when g has more than two eigenvalues above 1 or more than two below
/// -1. By interlacing no graph containing g as an induced subgraph can then
/// be a member, so augmentation may drop it. Decided exactly.
bool hereditary_prune(const SignedGraph& g);

struct LevelStats {
  int order = 0;
  long long parents = 0;
  long long children = 0;
  long long pruned = 0;
  long long exact_prune_checks = 0;
  long long frontier = 0;
  long long members = 0;
  double seconds = 0.0;
};

struct EnumerationReport {
  int max_order = 0;
  /// members[k-1]: sorted canonical codes of connected members of order k.
  std::vector<std::vector<CanonicalCode>> members;
  /// frontier[k-1]: sorted codes of all connected prune survivors of order
  /// k. Only filled below max_order; the last level keeps members only.
  std::vector<std::vector<CanonicalCode>> frontier;
  std::vector<LevelStats> stats;

  std::vector<long long> counts() const;
};

/// All switching-isomorphism classes of connected members up to
/// `max_order`, grown one vertex at a time from the prune survivors of the
/// previous order. Output does not depend on `workers`.
EnumerationReport enumerate_members(int max_order, int workers = 1);

/// Every child of `parent` obtained by adding one vertex joined to at least
/// one old vertex. Patterns are taken up to switching at the new vertex
/// (first nonzero entry positive).
std::vector<SignedGraph> one_vertex_extensions(const SignedGraph& parent);

struct Classification {
  /// Family tag name, or "unsigned", "disconnected", "unclassified".
  std::string tag = "unclassified";
  std::optional<FamilySpec> family;
  bool negated = false;
  std::string detail;

  std::string label() const;
};

/// Matches a member against the known families and their negatives, the
/// sporadic graphs, disconnected compositions, and switchings of unsigned
/// graphs, in that order. Throws std::invalid_argument for non-members.
Classification classify_member(const SignedGraph& g);

}  // namespace sgw
