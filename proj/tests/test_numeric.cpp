#include "oracles.hpp"
#include "sgw/exact.hpp"
#include "sgw/families.hpp"
#include "sgw/numeric.hpp"

#include <doctest.h>

#include <random>

using namespace sgw;

namespace {

void check_values(const NumericSpectrum& s, std::vector<double> expected) {
  std::sort(expected.rbegin(), expected.rend());
  REQUIRE(s.values.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(s.values[i] == doctest::Approx(expected[i]).epsilon(1e-10));
}

}  // namespace

TEST_CASE("jacobi agrees with the reference solver") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 16;
    const auto g = oracle::random_signed_graph(n, rng);
    const auto s = eigenvalues(g);
    REQUIRE(static_cast<int>(s.values.size()) == n);
    CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
    const auto ref = oracle::eigenvalues(g);
    for (int i = 0; i < n; ++i) CHECK(std::abs(s.values[n - 1 - i] - ref[i]) < 1e-10 * n);
    double sum = 0, squares = 0;
    for (double x : s.values) {
      sum += x;
      squares += x * x;
    }
    CHECK(std::abs(sum) < 1e-8);
    CHECK(std::abs(squares - 2 * g.edge_count()) < 1e-8);
  }
}

TEST_CASE("numeric counts match exact counts away from the thresholds") {
  std::mt19937 rng(43);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 15;
    const auto g = oracle::random_signed_graph(n, rng);
    const auto s = eigenvalues(g);
    const auto roots = oracle::eigenvalues(g);
    const bool clear = std::none_of(roots.begin(), roots.end(), [](double x) {
      return (std::abs(x - 1) < 1e-3 && std::abs(x - 1) > 1e-9) ||
             (std::abs(x + 1) < 1e-3 && std::abs(x + 1) > 1e-9);
    });
    if (!clear) continue;
    ++compared;
    const auto cp = char_poly(g);
    CHECK(std::count_if(s.values.begin(), s.values.end(), [](double x) { return x > 1 + 1e-6; }) ==
          count_roots_above(cp, Rational(1)));
    CHECK(std::count_if(s.values.begin(), s.values.end(), [](double x) { return x < -1 - 1e-6; }) ==
          count_roots_below(cp, Rational(-1)));
  }
  CHECK(compared > 100);
}

TEST_CASE("spectrum examples") {
  check_values(eigenvalues(complete_graph(2, 1)), {1, -1});
  check_values(eigenvalues(build({FamilyTag::BipA})), {4, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -4});
  const double r8 = 2 * std::sqrt(2.0);
  check_values(eigenvalues(build({FamilyTag::Sporadic2})), {r8, 1, 1, 1, -1, -1, -1, -r8});
}

TEST_CASE("pretty spectrum") {
  CHECK(pretty_spectrum(eigenvalues(complete_graph(2, 1))) == "{-1, 1}");
  // The matrix S(3,2): +1 twice, -1 once, (-1 +- sqrt33)/2.
  CHECK(pretty_spectrum(eigenvalues(build({FamilyTag::SMl, 3, 2}))) == "{-1, 1^2, -3.3723, 2.3723}");
  CHECK(pretty_spectrum(eigenvalues(negate(build({FamilyTag::SMl, 3, 2})))) ==
        "{-1^2, 1, -2.3723, 3.3723}");
  CHECK(pretty_spectrum(eigenvalues(as_signed(underlying(build({FamilyTag::A1, 1, 2}))))) ==
        "{-1^2, 1, -1.5616, 2.5616}");
  CHECK(pretty_spectrum(eigenvalues(complete_graph(4, 1))) == "{-1^3, 3}");
  CHECK(pretty_spectrum(eigenvalues(SignedGraph(3))) == "{0^3}");
  CHECK(pretty_spectrum(NumericSpectrum{}) == "{}");
}
