#pragma once

#include "sgw/enumerate.hpp"
#include "sgw/signed_graph.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace sgw {

struct ClaimReport {
  std::string name;
  /// What was actually covered, in words.
  std::string scope;
  long long instances = 0;
  long long failures = 0;
  /// The first few failing instances, rendered as text.
  std::vector<std::string> counterexamples;
  double seconds = 0.0;

  bool passed() const { return failures == 0; }
  void fail(std::string what);
};

nlohmann::json to_json(const ClaimReport& r);

/// Every labeled simple graph on n vertices (2^(n(n-1)/2) of them).
void for_each_labeled_graph(int n, const std::function<void(const UnsignedGraph&)>& f);

/// One signed graph per switching class of each labeled graph on n vertices:
/// the signing that is positive on the breadth-first spanning forest. Any
/// switching-invariant property holds for all signed graphs of order n iff
/// it holds for these.
void for_each_forest_normal_signing(int n, const std::function<void(const SignedGraph&)>& f);

/// Smallest eigenvalue >= -1 implies the underlying graph is a disjoint
/// union of complete graphs. Exhaustive up to switching, order <= max_order.
ClaimReport verify_lemma_min_eigenvalue(int max_order);

/// All eigenvalues are +-1 iff the underlying graph is a perfect matching.
ClaimReport verify_all_pm1(int max_order);

/// in_F(h) iff h has no induced F0..F4, over all labeled graphs.
ClaimReport verify_forbidden_subgraphs(int max_order);

/// Exact characteristic polynomials of every family member against the
/// closed forms, m, l in [1,6] and BIP_C m in [3,10].
ClaimReport verify_closed_forms();

/// A connected member with exactly one eigenvalue other than +-1 is
/// switching isomorphic with K_n or -K_n, n != 2.
ClaimReport verify_one_exception(const EnumerationReport& report);

/// Disconnected members without isolated edges, built from pairs of
/// connected members, are unions of two +-complete graphs; conversely such
/// unions are members.
ClaimReport verify_disconnected(const EnumerationReport& report);

/// Seidel interval condition implies switching equivalence into F, over all
/// labeled graphs of order <= max_order.
ClaimReport verify_seidel_theorem(int max_order);

/// Connected bipartite members are switching isomorphic with K1, K2 or a
/// bipartite family graph; rank(NN^T - I) = 1 for BIP_A, BIP_B, BIP_C(m <= 8).
ClaimReport verify_bipartite_theorem(const EnumerationReport& report);

/// No complete member has a cospectral mate that is not switching
/// isomorphic with it, among connected members and disconnected
/// compositions of the same order.
ClaimReport verify_complete_ds(const EnumerationReport& report);

/// The order-16 pair BIP_C(8) / A2(2,6) and the padded A3 mates of the
/// bipartite families.
ClaimReport verify_cospectral_mates();

const std::vector<std::string>& claim_names();

/// Runs one claim by name. `report` supplies enumerated members for the
/// claims that need them (orders up to report.max_order).
ClaimReport run_claim(const std::string& name, const EnumerationReport& report);

/// Whether the named claim reads enumeration output.
bool claim_needs_enumeration(const std::string& name);

}  // namespace sgw
