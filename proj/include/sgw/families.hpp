#pragma once

#include "sgw/polynomial.hpp"
#include "sgw/signed_graph.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sgw {

enum class FamilyTag { SMl, BipA, BipB, BipC, A1, A2, A3, A4, Sporadic1, Sporadic2 };

/// Lowercase CLI name, e.g. "s-ml", "bip-c", "sporadic-2".
std::string_view tag_name(FamilyTag tag);
std::optional<FamilyTag> parse_tag(std::string_view name);
const std::vector<FamilyTag>& all_tags();

/// Whether the family is indexed by (m, l), by m alone, or by nothing.
int parameter_count(FamilyTag tag);

struct FamilySpec {
  FamilyTag tag = FamilyTag::SMl;
  int m = 0;
  int l = 0;

  /// Throws std::invalid_argument when parameters are out of range.
  void validate() const;
  int order() const;
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Roots (s +- sqrt(d)) / 2 of x^2 - s x + (s^2 - d)/4.
struct QuadraticSurd {
  long long s = 0;
  long long d = 0;
};
struct IntegerPair {
  long long r1 = 0;
  long long r2 = 0;
};

struct ClosedFormSpectrum {
  int mult_minus = 0;
  int mult_plus = 0;
  std::variant<std::monostate, QuadraticSurd, IntegerPair> residual;

  int size() const;
  /// (x+1)^mult_minus (x-1)^mult_plus times the residual factor.
  IntPolynomial polynomial() const;
  std::string to_string() const;
};

/// Adjacency sign matrix of the family member, blocks in printed order.
SignedGraph build(const FamilySpec& spec);

/// The exact spectrum of build(spec).
ClosedFormSpectrum closed_form_spectrum(const FamilySpec& spec);

/// An equitable partition of build(spec): the printed blocks, split further
/// for BIP_A and BIP_B, singletons for the sporadic graphs.
std::vector<VertexSet> block_partition(const FamilySpec& spec);

/// Every family member with order <= max_order (m, l swept from 1, BIP_C
/// from 3), including parameterless families that fit.
std::vector<FamilySpec> members_up_to(int max_order);

/// 0/1 matrix with ones on the anti-diagonal.
Eigen::MatrixXi reverse_identity(int m);

/// The biadjacency block N of the bipartite families.
Eigen::MatrixXi biadjacency(const FamilySpec& spec);

/// K_m + l K_1 (m >= 1, l >= 0) or its complement.
bool in_F(const UnsignedGraph& h);

/// True when no 4 vertices induce 2K2, P3+K1, P4, the paw, or C4.
bool forbidden_subgraph_free(const UnsignedGraph& h);

/// Which of F0..F4 an order-4 graph is, or -1 when it is none of them.
int forbidden_index(const UnsignedGraph& four);

/// Quotient matrix of signed row sums when `partition` is equitable.
/// Throws std::invalid_argument when `partition` does not cover every vertex
/// exactly once.
std::optional<Eigen::MatrixXi> equitable_quotient(const SignedGraph& g,
                                                  const std::vector<VertexSet>& partition);

}  // namespace sgw
