#include "oracles.hpp"
#include "sgw/canon.hpp"
#include "sgw/exact.hpp"
#include "sgw/families.hpp"

#include <doctest.h>

using namespace sgw;

namespace {

std::vector<FamilySpec> sweep() {
  std::vector<FamilySpec> out;
  for (FamilyTag tag : all_tags()) {
    if (parameter_count(tag) == 2) {
      for (int m = 1; m <= 6; ++m)
        for (int l = 1; l <= 6; ++l) out.push_back({tag, m, l});
    } else if (parameter_count(tag) == 1) {
      for (int m = 3; m <= 10; ++m) out.push_back({tag, m, 0});
    } else {
      out.push_back({tag, 0, 0});
    }
  }
  return out;
}

int trace_cubed(const SignedGraph& g) {
  const Eigen::MatrixXi a = g.adjacency<int>();
  return (a * a * a).trace();
}

UnsignedGraph graph(int n, std::vector<std::pair<int, int>> e) { return UnsignedGraph::from_edges(n, e); }

UnsignedGraph friendship(int l) {
  UnsignedGraph h(2 * l + 1);
  for (int t = 0; t < l; ++t) {
    h.set_edge(0, 2 * t + 1, true);
    h.set_edge(0, 2 * t + 2, true);
    h.set_edge(2 * t + 1, 2 * t + 2, true);
  }
  return h;
}

}  // namespace

TEST_CASE("tags") {
  for (FamilyTag tag : all_tags()) CHECK(parse_tag(tag_name(tag)) == tag);
  CHECK(tag_name(FamilyTag::SMl) == "s-ml");
  CHECK(tag_name(FamilyTag::Sporadic2) == "sporadic-2");
  CHECK_FALSE(parse_tag("a5"));
  CHECK(all_tags().size() == 10);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build({FamilyTag::SMl, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build({FamilyTag::A3, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build({FamilyTag::BipC, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_spectrum({FamilyTag::A4, -1, 2}), std::invalid_argument);
  CHECK_NOTHROW(build({FamilyTag::BipC, 3, 0}));
  CHECK_NOTHROW(build({FamilyTag::BipA, 0, 0}));
}

TEST_CASE("closed forms agree with the oracle characteristic polynomial") {
  for (const auto& spec : sweep()) {
    CAPTURE(spec.name());
    const auto g = build(spec);
    const auto cf = closed_form_spectrum(spec);
    CHECK(g.order() == spec.order());
    CHECK(cf.size() == g.order());
    CHECK(cf.polynomial() == IntPolynomial(oracle::char_poly(g)));
    CHECK(membership(g).member);
  }
}

TEST_CASE("closed form values") {
  auto s11 = closed_form_spectrum({FamilyTag::SMl, 1, 1});
  CHECK(s11.mult_minus == 0);
  CHECK(s11.mult_plus == 0);
  CHECK(std::get<QuadraticSurd>(s11.residual).s == 0);
  CHECK(std::get<QuadraticSurd>(s11.residual).d == 4);
  const auto a3 = closed_form_spectrum({FamilyTag::A3, 1, 1});
  CHECK(a3.mult_minus == 1);
  CHECK(a3.mult_plus == 1);
  CHECK(std::get<IntegerPair>(a3.residual).r1 == -2);
  CHECK(std::get<IntegerPair>(a3.residual).r2 == 2);
  const auto bip = closed_form_spectrum({FamilyTag::BipA});
  CHECK(bip.mult_minus == 5);
  CHECK(bip.mult_plus == 5);
  CHECK(std::get<IntegerPair>(bip.residual).r2 == 4);
  // The built S(m,l) carries +1 with multiplicity m-1.
  const auto s32 = closed_form_spectrum({FamilyTag::SMl, 3, 2});
  CHECK(s32.mult_plus == 2);
  CHECK(s32.mult_minus == 1);
  CHECK(std::get<QuadraticSurd>(s32.residual).s == -1);
  CHECK(std::get<QuadraticSurd>(s32.residual).d == 33);
  CHECK(to_string(s32.polynomial()) == to_string(char_poly(build({FamilyTag::SMl, 3, 2}))));
}

TEST_CASE("build examples") {
  CHECK(build({FamilyTag::SMl, 1, 1}) == complete_graph(2, 1));
  for (int l = 1; l <= 6; ++l) CHECK(build({FamilyTag::A1, 2, l}) == build({FamilyTag::A2, 1, l}));

  const auto s1 = build({FamilyTag::Sporadic1});
  CHECK(s1.order() == 7);
  CHECK(s1.edge_count() == 13);
  const auto e1 = s1.edges();
  CHECK(std::count_if(e1.begin(), e1.end(), [](const SignedEdge& e) { return e.sign < 0; }) == 1);
  CHECK(s1(0, 1) == -1);
  // Caption spectrum {-1^3, 1^2, (1 +- sqrt41)/2}: power sums 26 and 30.
  CHECK(2 * s1.edge_count() == 26);
  CHECK(trace_cubed(s1) == 30);

  const auto s2 = build({FamilyTag::Sporadic2});
  CHECK(s2.order() == 8);
  CHECK(s2.edge_count() == 11);
  CHECK(s2(0, 1) == -1);
  // {-1^3, 1^3, +-2sqrt2} is symmetric, so trace(A^3) = 0.
  CHECK(2 * s2.edge_count() == 22);
  CHECK(trace_cubed(s2) == 0);

  const auto c = build({FamilyTag::BipC, 4, 0});
  CHECK(c.edge_count() == 12);
  CHECK(bipartition(underlying(c)));
}

TEST_CASE("A1 with m = 1 and the friendship graph") {
  // Recorded outcome: A1(1,l) is switching isomorphic with the negative of
  // the friendship graph, never with the friendship graph itself.
  for (int l = 1; l <= 6; ++l) {
    const auto a = build({FamilyTag::A1, 1, l});
    const auto f = as_signed(friendship(l));
    // same underlying graph up to relabelling (both all-positive and connected)
    CHECK(switching_isomorphic(as_signed(underlying(a)), f));
    CHECK_FALSE(switching_isomorphic(a, f));
    CHECK(switching_isomorphic(a, negate(f)));
  }
}

TEST_CASE("members_up_to") {
  const auto specs = members_up_to(8);
  for (const auto& s : specs) CHECK(s.order() <= 8);
  CHECK(std::count(specs.begin(), specs.end(), FamilySpec{FamilyTag::Sporadic2, 0, 0}) == 1);
  CHECK(std::count(specs.begin(), specs.end(), FamilySpec{FamilyTag::BipC, 4, 0}) == 1);
  CHECK(std::count(specs.begin(), specs.end(), FamilySpec{FamilyTag::BipA, 0, 0}) == 0);
}

TEST_CASE("reverse identity") {
  const auto r = reverse_identity(4);
  CHECK(r(0, 3) == 1);
  CHECK(r(3, 0) == 1);
  CHECK(r.sum() == 4);
  CHECK(r * r == Eigen::MatrixXi::Identity(4, 4));
}

TEST_CASE("class F") {
  for (int n = 0; n <= 3; ++n) {
    // every graph of order <= 3
    const int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      UnsignedGraph h(n);
      int e = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++e)
          if (mask >> e & 1) h.set_edge(i, j, true);
      CHECK(in_F(h));
    }
  }
  CHECK_FALSE(in_F(graph(4, {{0, 1}, {2, 3}})));
  CHECK(in_F(graph(5, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK(in_F(complement(graph(5, {{0, 1}, {0, 2}, {1, 2}}))));
  CHECK_FALSE(in_F(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("forbidden subgraphs") {
  const UnsignedGraph f0 = graph(4, {{0, 1}, {2, 3}});
  const UnsignedGraph f1 = graph(4, {{0, 1}, {1, 2}});
  const UnsignedGraph f2 = graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const UnsignedGraph f3 = graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const UnsignedGraph f4 = graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(forbidden_index(f0) == 0);
  CHECK(forbidden_index(f1) == 1);
  CHECK(forbidden_index(f2) == 2);
  CHECK(forbidden_index(f3) == 3);
  CHECK(forbidden_index(f4) == 4);
  CHECK(forbidden_index(complement(UnsignedGraph(4))) == -1);
  CHECK(forbidden_index(graph(4, {{0, 1}})) == -1);
  CHECK_THROWS_AS(forbidden_index(UnsignedGraph(3)), std::invalid_argument);

  CHECK(forbidden_subgraph_free(complement(UnsignedGraph(5))));
  CHECK_FALSE(forbidden_subgraph_free(f4));
  CHECK_FALSE(forbidden_subgraph_free(f2));
  // complement closure on a sample of order-6 graphs
  for (int mask = 0; mask < (1 << 15); mask += 37) {
    UnsignedGraph h(6);
    int e = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j, ++e)
        if (mask >> e & 1) h.set_edge(i, j, true);
    CHECK(forbidden_subgraph_free(h) == forbidden_subgraph_free(complement(h)));
  }
}

TEST_CASE("equitable quotients") {
  for (int m = 1; m <= 4; ++m) {
    for (int l = 1; l <= 4; ++l) {
      const FamilySpec a1{FamilyTag::A1, m, l};
      const auto q1 = equitable_quotient(build(a1), block_partition(a1));
      REQUIRE(q1);
      Eigen::MatrixXi e1(2, 2);
      e1 << m - 1, 2 * l, m, -1;
      CHECK(*q1 == e1);
      const FamilySpec a2{FamilyTag::A2, m, l};
      const auto q2 = equitable_quotient(build(a2), block_partition(a2));
      REQUIRE(q2);
      Eigen::MatrixXi e2(2, 2);
      e2 << 1, 2 * l, 2 * m, -1;
      CHECK(*q2 == e2);
    }
  }
  const auto g = build({FamilyTag::Sporadic1});
  std::vector<VertexSet> singletons;
  for (int v = 0; v < g.order(); ++v) singletons.push_back({v});
  const auto q = equitable_quotient(g, singletons);
  REQUIRE(q);
  CHECK(*q == g.adjacency<int>());
  CHECK_FALSE(equitable_quotient(g, {{0, 1, 2, 3}, {4, 5, 6}}));
  CHECK_THROWS_AS(equitable_quotient(g, {{0, 1, 2}, {2, 3, 4, 5, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(equitable_quotient(g, {{0, 1, 2}, {3, 4, 5}}), std::invalid_argument);
}

TEST_CASE("quotient eigenvalues are eigenvalues of the graph") {
  for (const auto& spec : sweep()) {
    CAPTURE(spec.name());
    const auto g = build(spec);
    const auto q = equitable_quotient(g, block_partition(spec));
    REQUIRE(q);
    Eigen::EigenSolver<Eigen::MatrixXd> es(q->cast<double>());
    const auto ev = oracle::eigenvalues(g);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const auto z = es.eigenvalues()(i);
      CHECK(std::abs(z.imag()) < 1e-8);
      CHECK(std::any_of(ev.begin(), ev.end(), [&](double x) { return std::abs(x - z.real()) < 1e-8; }));
    }
  }
}
