#include "sgw/exact.hpp"

#include <cstdint>

namespace sgw {

namespace {

// Adjugate coefficients of an order-n matrix with entries in {-1, 0, 1} are
// bounded by sum_j C(n-1, j) j^(j/2); that stays below 2^62 through n = 24.
constexpr int kInt64OrderLimit = 24;

}  // namespace

IntPolynomial char_poly(const SignedGraph& g) {
  if (g.order() <= kInt64OrderLimit) {
    return char_poly_faddeev<std::int64_t>(g.matrix()).cast<BigInt>();
  }
  return char_poly_faddeev<BigInt>(g.matrix());
}

IntPolynomial char_poly(const Eigen::MatrixXi& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("char_poly needs a square matrix");
  return char_poly_faddeev<BigInt>(a);
}

PmOneSplit mult_at_pm1(const IntPolynomial& p) {
  PmOneSplit out;
  out.residual = p;
  while (auto q = divide_by_root(out.residual, BigInt(1))) {
    out.residual = *std::move(q);
    ++out.mult_plus;
  }
  while (auto q = divide_by_root(out.residual, BigInt(-1))) {
    out.residual = *std::move(q);
    ++out.mult_minus;
  }
  return out;
}

int count_roots_above(const IntPolynomial& p, const Rational& threshold) {
  return sgw::count_roots_above<BigInt>(p, threshold);
}

int count_roots_below(const IntPolynomial& p, const Rational& threshold) {
  return sgw::count_roots_below<BigInt>(p, threshold);
}

MembershipReport membership_of_poly(const IntPolynomial& cp, int n) {
  auto split = mult_at_pm1(cp);
  MembershipReport r;
  r.n = n;
  r.mult_plus = split.mult_plus;
  r.mult_minus = split.mult_minus;
  r.residual = std::move(split.residual);
  r.member = n - r.mult_plus - r.mult_minus <= 2;
  return r;
}

MembershipReport membership(const SignedGraph& g) {
  return membership_of_poly(char_poly(g), g.order());
}

nlohmann::json to_json(const MembershipReport& r) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : r.residual.coeffs()) coeffs.push_back(c.str());
  return {{"schema", 1},
          {"n", r.n},
          {"mult_plus", r.mult_plus},
          {"mult_minus", r.mult_minus},
          {"residual_coeffs", coeffs},
          {"member", r.member}};
}

bool seidel_interval_condition(const SignedGraph& g) {
  if (!g.is_complete()) {
    throw std::invalid_argument("seidel_interval_condition needs a complete signed graph");
  }
  const auto p = char_poly(g);
  return count_roots_above(p, Rational(1)) + count_roots_below(p, Rational(-1)) <= 2;
}

bool spectrum_symmetric(const IntPolynomial& p) {
  const int n = p.degree();
  for (int i = 0; i <= n; ++i) {
    if ((n - i) % 2 == 1 && p.coeff(i) != 0) return false;
  }
  return true;
}

}  // namespace sgw
