#pragma once

#include "sgw/polynomial.hpp"
#include "sgw/signed_graph.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <json.hpp>

#include <stdexcept>
#include <string>

namespace sgw {

/// det(xI - A) by Faddeev-LeVerrier. `Int` must hold every intermediate
/// adjugate coefficient exactly; the divisions by k are exact.
template <typename Int, typename Derived>
Polynomial<Int> char_poly_faddeev(const Eigen::MatrixBase<Derived>& a_in) {
  using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
  const Mat a = a_in.template cast<Int>();
  const Eigen::Index n = a.rows();
  std::vector<Int> c(static_cast<std::size_t>(n + 1), Int(0));
  c[n] = 1;
  Mat m = Mat::Zero(n, n);
  Mat am = Mat::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
    m = am;
    m.diagonal().array() += c[n - k + 1];
    am = a.lazyProduct(m);
    Int tr = am.trace();
    c[n - k] = -tr / Int(k);
  }
  return Polynomial<Int>(std::move(c));
}

/// Monic characteristic polynomial of the sign matrix, exact.
IntPolynomial char_poly(const SignedGraph& g);

/// Characteristic polynomial of an arbitrary square integer matrix.
IntPolynomial char_poly(const Eigen::MatrixXi& a);

struct PmOneSplit {
  int mult_plus = 0;
  int mult_minus = 0;
  IntPolynomial residual;
};

/// Largest a, b with (x-1)^a (x+1)^b dividing p, and the cofactor.
PmOneSplit mult_at_pm1(const IntPolynomial& p);

int count_roots_above(const IntPolynomial& p, const Rational& threshold);
int count_roots_below(const IntPolynomial& p, const Rational& threshold);

struct MembershipReport {
  int n = 0;
  int mult_plus = 0;
  int mult_minus = 0;
  IntPolynomial residual;
  bool member = false;

  int exceptional() const { return residual.degree() < 0 ? 0 : residual.degree(); }
};

/// Decides whether all but at most two eigenvalues of `g` equal +1 or -1.
MembershipReport membership(const SignedGraph& g);
MembershipReport membership_of_poly(const IntPolynomial& char_poly, int n);

/// JSON record: {schema, n, mult_plus, mult_minus, residual_coeffs, member}.
/// Coefficients are decimal strings, lowest degree first.
nlohmann::json to_json(const MembershipReport& r);

/// For a signed complete graph: at most two eigenvalues outside [-1, 1].
/// Throws std::invalid_argument for non-complete input.
bool seidel_interval_condition(const SignedGraph& g);

/// p(x) == (-1)^deg p(-x), i.e. the root multiset is symmetric about 0.
bool spectrum_symmetric(const IntPolynomial& p);

/// Rank over Q by fraction-free (Bareiss) elimination.
template <typename Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& a_in) {
  using Mat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index rows = a_in.rows();
  const Eigen::Index cols = a_in.cols();
  Mat a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = BigInt(a_in(i, j));
  BigInt prev = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace sgw
