#include "sgw/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace sgw {

namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(n));
  }
}

void check_vertex_set(const VertexSet& s, int n) {
  for (int v : s) check_vertex(v, n);
}

void check_symmetric(const SignMatrix& m, int lo) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) throw std::invalid_argument("nonzero diagonal entry");
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
      if (m(i, j) < lo || m(i, j) > 1) {
        throw std::invalid_argument("entry outside the allowed range");
      }
    }
  }
}

}  // namespace

UnsignedGraph::UnsignedGraph(int n) : adj_(SignMatrix::Zero(n, n)) {
  if (n < 0) throw std::invalid_argument("negative order");
}

UnsignedGraph::UnsignedGraph(SignMatrix adj) : adj_(std::move(adj)) {
  check_symmetric(adj_, 0);
}

UnsignedGraph UnsignedGraph::from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  UnsignedGraph h(n);
  for (auto [u, v] : edges) h.set_edge(u, v, true);
  return h;
}

int UnsignedGraph::degree(int v) const {
  check_vertex(v, order());
  return adj_.row(v).cast<int>().sum();
}

int UnsignedGraph::edge_count() const { return adj_.cast<int>().sum() / 2; }

void UnsignedGraph::set_edge(int i, int j, bool present) {
  check_vertex(i, order());
  check_vertex(j, order());
  if (i == j) throw std::invalid_argument("self-loop");
  adj_(i, j) = adj_(j, i) = present ? 1 : 0;
}

SignedGraph::SignedGraph(int n) : sign_(SignMatrix::Zero(n, n)) {
  if (n < 0) throw std::invalid_argument("negative order");
}

SignedGraph::SignedGraph(SignMatrix sign) : sign_(std::move(sign)) {
  check_symmetric(sign_, -1);
}

SignedGraph SignedGraph::from_edges(int n, const std::vector<SignedEdge>& edges) {
  SignedGraph g(n);
  for (const auto& e : edges) g.set_sign(e.u, e.v, e.sign);
  return g;
}

void SignedGraph::set_sign(int i, int j, int s) {
  check_vertex(i, order());
  check_vertex(j, order());
  if (i == j) throw std::invalid_argument("self-loop");
  if (s < -1 || s > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
  sign_(i, j) = sign_(j, i) = static_cast<std::int8_t>(s);
}

int SignedGraph::edge_count() const { return sign_.cwiseAbs().cast<int>().sum() / 2; }

bool SignedGraph::is_complete() const {
  const int n = order();
  return edge_count() == n * (n - 1) / 2;
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  for (int i = 0; i < order(); ++i) {
    for (int j = i + 1; j < order(); ++j) {
      if (sign_(i, j) != 0) out.push_back({i, j, sign_(i, j)});
    }
  }
  return out;
}

SignedGraph switch_at(const SignedGraph& g, const VertexSet& x) {
  const int n = g.order();
  check_vertex_set(x, n);
  Eigen::Matrix<std::int8_t, Eigen::Dynamic, 1> d =
      Eigen::Matrix<std::int8_t, Eigen::Dynamic, 1>::Ones(n);
  for (int v : x) d(v) = -1;
  SignMatrix m = d.asDiagonal() * g.matrix() * d.asDiagonal();
  return SignedGraph(std::move(m));
}

SignedGraph negate(const SignedGraph& g) { return SignedGraph(SignMatrix(-g.matrix())); }

SignedGraph permute(const SignedGraph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation size does not match order");
  }
  SignMatrix m = SignMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    check_vertex(perm[i], n);
    for (int j = 0; j < n; ++j) m(perm[i], perm[j]) = g.matrix()(i, j);
  }
  return SignedGraph(std::move(m));
}

UnsignedGraph underlying(const SignedGraph& g) {
  return UnsignedGraph(SignMatrix(g.matrix().cwiseAbs()));
}

SignedGraph as_signed(const UnsignedGraph& h) { return SignedGraph(h.matrix()); }

SignedGraph induced(const SignedGraph& g, const VertexSet& s) {
  check_vertex_set(s, g.order());
  const int k = static_cast<int>(s.size());
  SignMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = g.matrix()(s[i], s[j]);
  }
  return SignedGraph(std::move(m));
}

UnsignedGraph induced(const UnsignedGraph& h, const VertexSet& s) {
  return underlying(induced(as_signed(h), s));
}

SignedGraph disjoint_union(const SignedGraph& g, const SignedGraph& h) {
  const int a = g.order();
  const int b = h.order();
  SignMatrix m = SignMatrix::Zero(a + b, a + b);
  m.topLeftCorner(a, a) = g.matrix();
  m.bottomRightCorner(b, b) = h.matrix();
  return SignedGraph(std::move(m));
}

UnsignedGraph disjoint_union(const UnsignedGraph& g, const UnsignedGraph& h) {
  return underlying(disjoint_union(as_signed(g), as_signed(h)));
}

UnsignedGraph complement(const UnsignedGraph& h) {
  const int n = h.order();
  SignMatrix m = SignMatrix::Ones(n, n) - h.matrix();
  m.diagonal().setZero();
  return UnsignedGraph(std::move(m));
}

std::vector<VertexSet> components(const UnsignedGraph& h) {
  const int n = h.order();
  std::vector<int> seen(n, 0);
  std::vector<VertexSet> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w = 0; w < n; ++w) {
        if (h.adjacent(v, w) && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const SignedGraph& g) { return components(underlying(g)); }

bool is_connected(const SignedGraph& g) { return components(g).size() <= 1; }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const UnsignedGraph& h) {
  const int n = h.order();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        if (!h.adjacent(v, w)) continue;
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<VertexSet, VertexSet> parts;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

bool is_balanced(const SignedGraph& g) {
  // Propagate a switching along a BFS forest; balanced iff consistent.
  const int n = g.order();
  std::vector<int> side(n, 0);
  for (int s = 0; s < n; ++s) {
    if (side[s] != 0) continue;
    side[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < n; ++w) {
        const int e = g(v, w);
        if (e == 0) continue;
        const int want = side[v] * e;
        if (side[w] == 0) {
          side[w] = want;
          q.push(w);
        } else if (side[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

SignedGraph seidel_graph(const UnsignedGraph& h) {
  const int n = h.order();
  SignMatrix m = SignMatrix::Ones(n, n) - std::int8_t{2} * h.matrix();
  m.diagonal().setZero();
  return SignedGraph(std::move(m));
}

SignedGraph complete_graph(int n, int sign) {
  SignMatrix m = SignMatrix::Constant(n, n, static_cast<std::int8_t>(sign));
  m.diagonal().setZero();
  return SignedGraph(std::move(m));
}

}  // namespace sgw
