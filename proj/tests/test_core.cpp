#include "oracles.hpp"
#include "sgw/families.hpp"
#include "sgw/sg_format.hpp"
#include "sgw/signed_graph.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace sgw;

namespace {

SignedGraph edge(int sign) { return SignedGraph::from_edges(2, {{0, 1, sign}}); }

}  // namespace

TEST_CASE("construction validates the sign matrix") {
  SignMatrix m = SignMatrix::Zero(3, 3);
  m(0, 1) = 1;
  CHECK_THROWS_AS(SignedGraph{m}, std::invalid_argument);
  m(1, 0) = 1;
  CHECK_NOTHROW(SignedGraph{m});
  m(2, 2) = 1;
  CHECK_THROWS_AS(SignedGraph{m}, std::invalid_argument);
  m(2, 2) = 0;
  m(0, 2) = m(2, 0) = 2;
  CHECK_THROWS_AS(SignedGraph{m}, std::invalid_argument);

  SignedGraph g(3);
  CHECK_THROWS_AS(g.set_sign(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.set_sign(0, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(g.set_sign(0, 1, 5), std::invalid_argument);
}

TEST_CASE("switching") {
  std::mt19937 rng(7);
  const auto neg_edge = edge(-1);
  CHECK(switch_at(neg_edge, {}) == neg_edge);
  CHECK(switch_at(neg_edge, {0}) == edge(1));
  CHECK_THROWS_AS(switch_at(neg_edge, {2}), std::out_of_range);

  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_signed_graph(6, rng);
    const auto x = oracle::random_subset(6, rng);
    const auto s = switch_at(g, x);
    CHECK(switch_at(s, x) == g);
    CHECK(underlying(s) == underlying(g));
    CHECK(negate(s) == switch_at(negate(g), x));
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        const bool crosses = std::count(x.begin(), x.end(), i) != std::count(x.begin(), x.end(), j);
        CHECK(s(i, j) == (crosses ? -g(i, j) : g(i, j)));
      }
    }
  }
}

TEST_CASE("switching S(m,l) at its second block gives -S(l,m) with blocks swapped") {
  for (int m = 1; m <= 4; ++m) {
    for (int l = 1; l <= 4; ++l) {
      const auto s = build({FamilyTag::SMl, m, l});
      VertexSet second;
      for (int v = m; v < m + l; ++v) second.push_back(v);
      std::vector<int> perm(m + l);
      for (int v = 0; v < m; ++v) perm[v] = l + v;
      for (int v = m; v < m + l; ++v) perm[v] = v - m;
      CHECK(permute(switch_at(s, second), perm) == negate(build({FamilyTag::SMl, l, m})));
    }
  }
}

TEST_CASE("negation") {
  CHECK(negate(SignedGraph(4)) == SignedGraph(4));
  std::mt19937 rng(11);
  const auto g = oracle::random_signed_graph(7, rng);
  CHECK(negate(negate(g)) == g);
  CHECK(underlying(negate(g)) == underlying(g));
  CHECK(negate(complete_graph(3, 1)) == complete_graph(3, -1));
}

TEST_CASE("underlying graph") {
  auto tri = complete_graph(3, 1);
  tri.set_sign(0, 2, -1);
  CHECK(underlying(tri) == underlying(complete_graph(3, 1)));
  // A1(1,l) is the friendship graph: l triangles sharing vertex 0.
  for (int l = 1; l <= 4; ++l) {
    const auto h = underlying(build({FamilyTag::A1, 1, l}));
    CHECK(h.order() == 2 * l + 1);
    CHECK(h.edge_count() == 3 * l);
    CHECK(h.degree(0) == 2 * l);
    for (int v = 1; v < h.order(); ++v) CHECK(h.degree(v) == 2);
  }
  const auto s = underlying(build({FamilyTag::SMl, 3, 2}));
  CHECK(s.edge_count() == 10);
}

TEST_CASE("induced subgraphs keep vertex order") {
  std::mt19937 rng(3);
  const auto g = oracle::random_signed_graph(7, rng);
  VertexSet all{0, 1, 2, 3, 4, 5, 6};
  CHECK(induced(g, all) == g);
  const VertexSet s{1, 4, 6};
  const auto h = induced(g, s);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(h(i, j) == g(s[i], s[j]));
  CHECK(underlying(h) == induced(underlying(g), s));
  CHECK_THROWS_AS(induced(g, {0, 9}), std::out_of_range);
}

TEST_CASE("disjoint union and components") {
  const auto k3 = complete_graph(3, 1);
  const auto k4 = complete_graph(4, -1);
  CHECK(disjoint_union(k3, SignedGraph(0)) == k3);
  const auto u = disjoint_union(k3, k4);
  CHECK(u.order() == 7);
  const auto comps = components(u);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4, 5, 6});
  CHECK(components(SignedGraph(4)).size() == 4);
  CHECK(components(SignedGraph(0)).empty());
  CHECK(components(k3).size() == 1);
  CHECK(is_connected(k3));
  CHECK_FALSE(is_connected(u));
}

TEST_CASE("bipartition") {
  const auto k2 = bipartition(underlying(edge(1)));
  REQUIRE(k2);
  CHECK(k2->first == VertexSet{0});
  CHECK(k2->second == VertexSet{1});
  CHECK_FALSE(bipartition(underlying(complete_graph(3, 1))));
  const auto c = bipartition(underlying(build({FamilyTag::BipC, 3, 0})));
  REQUIRE(c);
  CHECK(c->first.size() == 3);
  CHECK(c->second.size() == 3);
}

TEST_CASE("balance") {
  auto tri = complete_graph(3, 1);
  CHECK(is_balanced(tri));
  tri.set_sign(0, 1, -1);
  CHECK_FALSE(is_balanced(tri));
  tri.set_sign(1, 2, -1);
  CHECK(is_balanced(tri));
}

TEST_CASE("seidel graph") {
  CHECK(seidel_graph(UnsignedGraph(4)) == complete_graph(4, 1));
  for (int m = 1; m <= 4; ++m) {
    for (int l = 1; l <= 3; ++l) {
      UnsignedGraph h(m + l);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) h.set_edge(i, j, true);
      CHECK(seidel_graph(h) == build({FamilyTag::SMl, m, l}));
    }
  }
  // F2 + K1 = P4 + K1: Seidel spectrum {-sqrt5^2, 0, sqrt5^2}.
  const auto h = UnsignedGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}});
  const auto p = oracle::char_poly(seidel_graph(h));
  CHECK(p == oracle::multiply({0, 1}, oracle::multiply({-5, 0, 1}, {-5, 0, 1})));
}

TEST_CASE("sg format parse") {
  const auto g = parse_sg("sg 2\n0 1 -\n");
  CHECK(g == edge(-1));
  const auto t = parse_sg("# a triangle\nsg 3\n0 1 +\n1 2 1\n\n0 2 -1\n");
  CHECK(t.edge_count() == 3);
  CHECK(t(0, 2) == -1);
  CHECK(t(1, 2) == 1);
  CHECK(parse_sg("sg 0\n").order() == 0);

  CHECK_THROWS_AS(parse_sg(""), ParseError);
  CHECK_THROWS_AS(parse_sg("graph 3\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg -1\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 3\n0 0 +\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 3\n0 3 +\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 3\n1 0 +\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 3\n0 1 +\n0 1 -\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 3\n0 1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_sg("sg 3\n0 1\n"), ParseError);
  try {
    parse_sg("sg 3\n0 1 +\n0 1 -\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("sg format round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_signed_graph(1 + trial % 9, rng);
    const auto text = serialize_sg(g);
    CHECK(parse_sg(text) == g);
    CHECK(serialize_sg(parse_sg(text)) == text);
    std::istringstream in(text);
    CHECK(read_sg(in) == g);
  }
  CHECK(serialize_sg(parse_sg("sg 3\n1 2 -1\n0 2 1\n")) == "sg 3\n0 2 +\n1 2 -\n");
}
