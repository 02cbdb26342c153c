#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sgw {

/// Dense sign matrix storage. Entries are -1, 0 or +1.
using SignMatrix = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Sorted list of vertex indices.
using VertexSet = std::vector<int>;

struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
class UnsignedGraph {
 public:
  UnsignedGraph() = default;
  explicit UnsignedGraph(int n);
  /// Throws std::invalid_argument unless `adj` is a symmetric 0/1 matrix with
  /// zero diagonal.
  explicit UnsignedGraph(SignMatrix adj);

  static UnsignedGraph from_edges(int n,
                                  const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.rows()); }
  bool adjacent(int i, int j) const { return adj_(i, j) != 0; }
  int degree(int v) const;
  int edge_count() const;
  const SignMatrix& matrix() const { return adj_; }

  void set_edge(int i, int j, bool present);

  friend bool operator==(const UnsignedGraph& a, const UnsignedGraph& b) {
    return a.adj_.rows() == b.adj_.rows() && a.adj_ == b.adj_;
  }

 private:
  SignMatrix adj_;
};

/// A graph whose edges carry a sign, stored as its symmetric adjacency sign
/// matrix. Operations on it are value-returning free functions.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(int n);
  /// Throws std::invalid_argument unless `sign` is symmetric with zero
  /// diagonal and entries in {-1, 0, 1}.
  explicit SignedGraph(SignMatrix sign);

  static SignedGraph from_edges(int n, const std::vector<SignedEdge>& edges);

  int order() const { return static_cast<int>(sign_.rows()); }
  int operator()(int i, int j) const { return sign_(i, j); }
  const SignMatrix& matrix() const { return sign_; }

  /// Writes both (i, j) and (j, i). Throws on out-of-range or i == j.
  void set_sign(int i, int j, int s);

  int edge_count() const;
  bool is_complete() const;
  /// Edges with u < v in lexicographic order.
  std::vector<SignedEdge> edges() const;

  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency() const {
    return sign_.template cast<Scalar>();
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.sign_.rows() == b.sign_.rows() && a.sign_ == b.sign_;
  }

 private:
  SignMatrix sign_;
};

SignedGraph switch_at(const SignedGraph& g, const VertexSet& x);
SignedGraph negate(const SignedGraph& g);
/// Relabels so that vertex v of `g` becomes vertex perm[v].
SignedGraph permute(const SignedGraph& g, const std::vector<int>& perm);
UnsignedGraph underlying(const SignedGraph& g);
/// All edges positive.
SignedGraph as_signed(const UnsignedGraph& h);
SignedGraph induced(const SignedGraph& g, const VertexSet& s);
UnsignedGraph induced(const UnsignedGraph& h, const VertexSet& s);
SignedGraph disjoint_union(const SignedGraph& g, const SignedGraph& h);
UnsignedGraph disjoint_union(const UnsignedGraph& g, const UnsignedGraph& h);
UnsignedGraph complement(const UnsignedGraph& h);

std::vector<VertexSet> components(const UnsignedGraph& h);
std::vector<VertexSet> components(const SignedGraph& g);
bool is_connected(const SignedGraph& g);

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const UnsignedGraph& h);

/// True when some switching makes every edge positive.
bool is_balanced(const SignedGraph& g);

/// Signed complete graph: -1 on edges of `h`, +1 on non-edges.
SignedGraph seidel_graph(const UnsignedGraph& h);

/// Complete graph on n vertices, every edge carrying `sign`.
SignedGraph complete_graph(int n, int sign = 1);

}  // namespace sgw
