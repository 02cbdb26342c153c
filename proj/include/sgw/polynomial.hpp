#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sgw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, coefficient i multiplies x^i. The leading
/// coefficient is never zero; the zero polynomial has no coefficients.
template <typename Int>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Int> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<Int> c) : c_(std::move(c)) { trim(); }

  /// (x - root)^k for an integer root.
  static Polynomial power_of_linear(const Int& root, int k) {
    Polynomial p{Int(1)};
    const Polynomial lin{Int(-root), Int(1)};
    for (int i = 0; i < k; ++i) p = p * lin;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& leading() const { return c_.back(); }
  Int coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Int> c(a.c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Int& s, const Polynomial& p) {
    return Polynomial{s} * p;
  }

  template <typename Other>
  Polynomial<Other> cast() const {
    std::vector<Other> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.emplace_back(x);
    return Polynomial<Other>(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

using IntPolynomial = Polynomial<BigInt>;

template <typename Int>
Polynomial<Int> derivative(const Polynomial<Int>& p) {
  if (p.degree() < 1) return {};
  std::vector<Int> c(p.degree());
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = Int(i) * p.coeff(i);
  return Polynomial<Int>(std::move(c));
}

/// p(-x).
template <typename Int>
Polynomial<Int> reflect(const Polynomial<Int>& p) {
  std::vector<Int> c(p.coeffs());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial<Int>(std::move(c));
}

template <typename Int>
Int evaluate(const Polynomial<Int>& p, const Int& x) {
  Int acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
  return acc;
}

/// Sign of p(num/den) for den > 0, computed as den^deg * p(num/den).
template <typename Int>
int sign_at(const Polynomial<Int>& p, const Int& num, const Int& den) {
  Int acc = 0;
  Int den_pow = 1;
  // Horner on the homogenized form: sum c_i num^i den^(d-i).
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * num + p.coeff(i) * den_pow;
    den_pow *= den;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

/// Exact quotient p / (x - r) when r is a root, nullopt otherwise.
template <typename Int>
std::optional<Polynomial<Int>> divide_by_root(const Polynomial<Int>& p, const Int& r) {
  if (p.degree() < 1) return std::nullopt;
  std::vector<Int> q(p.degree());
  Int carry = 0;
  for (int i = p.degree(); i >= 1; --i) {
    carry = carry * r + p.coeff(i);
    q[i - 1] = carry;
  }
  if (carry * r + p.coeff(0) != 0) return std::nullopt;
  return Polynomial<Int>(std::move(q));
}

/// Exact quotient p / (den*x - num) over the integers, nullopt if it does
/// not divide. Requires gcd(num, den) = 1 and den > 0.
template <typename Int>
std::optional<Polynomial<Int>> divide_by_linear(const Polynomial<Int>& p, const Int& num,
                                                const Int& den) {
  if (p.degree() < 1) return std::nullopt;
  std::vector<Int> rem(p.coeffs());
  std::vector<Int> q(p.degree());
  for (int i = p.degree(); i >= 1; --i) {
    if (rem[i] % den != 0) return std::nullopt;
    q[i - 1] = rem[i] / den;
    rem[i - 1] += q[i - 1] * num;
  }
  if (rem[0] != 0) return std::nullopt;
  return Polynomial<Int>(std::move(q));
}

/// Positive gcd of the coefficients (0 for the zero polynomial).
template <typename Int>
Int content(const Polynomial<Int>& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    using boost::multiprecision::gcd;
    using std::gcd;
    g = gcd(g, c < 0 ? Int(-c) : c);
    if (g == 1) break;
  }
  return g;
}

/// p divided by its positive content; the sign of p is kept.
template <typename Int>
Polynomial<Int> primitive_part(const Polynomial<Int>& p) {
  const Int g = content(p);
  if (g == 0 || g == 1) return p;
  std::vector<Int> c(p.coeffs());
  for (auto& x : c) x /= g;
  return Polynomial<Int>(std::move(c));
}

/// Remainder r with lc(b)^e * a = q*b + r, together with the sign of
/// lc(b)^e, so that sign * r is a positive multiple of (a mod b) over Q.
template <typename Int>
std::pair<Polynomial<Int>, int> pseudo_remainder(const Polynomial<Int>& a,
                                                 const Polynomial<Int>& b) {
  std::vector<Int> r(a.coeffs());
  const int db = b.degree();
  const Int& lb = b.leading();
  int scale_sign = 1;
  int dr = a.degree();
  while (dr >= db && dr >= 0) {
    const Int lr = r[dr];
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeff(i);
    if (lb < 0) scale_sign = -scale_sign;
    while (dr >= 0 && r[dr] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  return {Polynomial<Int>(std::move(r)), scale_sign};
}

/// Sturm chain p, p', -rem, ... with primitive-part reduction at each step.
/// The last element is a constant multiple of gcd(p, p').
template <typename Int>
std::vector<Polynomial<Int>> sturm_chain(const Polynomial<Int>& p) {
  std::vector<Polynomial<Int>> chain;
  if (p.is_zero()) return chain;
  chain.push_back(primitive_part(p));
  Polynomial<Int> d = primitive_part(derivative(p));
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    auto [r, s] = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    r = primitive_part(r);
    chain.push_back(s > 0 ? -r : r);
  }
  return chain;
}

namespace detail {

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Number of distinct real roots strictly greater than num/den, given that
/// num/den is not a root of `p`.
template <typename Int>
int count_distinct_roots_above(const std::vector<Polynomial<Int>>& chain, const Int& num,
                               const Int& den) {
  std::vector<int> at_t, at_inf;
  at_t.reserve(chain.size());
  at_inf.reserve(chain.size());
  for (const auto& q : chain) {
    at_t.push_back(sign_at(q, num, den));
    at_inf.push_back(q.leading() > 0 ? 1 : -1);
  }
  return detail::sign_changes(at_t) - detail::sign_changes(at_inf);
}

/// Number of real roots of `p` strictly greater than `threshold`, counted
/// with multiplicity. Exact when all roots of `p` are real; for other inputs
/// the result is meaningless.
template <typename Int>
int count_roots_above(Polynomial<Int> p, const Rational& threshold) {
  if (p.degree() < 1) return 0;
  const Int num(numerator(threshold));
  const Int den(denominator(threshold));
  while (auto q = divide_by_linear(p, num, den)) p = *std::move(q);

  // Roots of multiplicity k survive in k successive gcd(q, q') stages.
  int total = 0;
  while (p.degree() >= 1) {
    auto chain = sturm_chain(p);
    total += count_distinct_roots_above(chain, num, den);
    p = chain.back();
  }
  return total;
}

template <typename Int>
int count_roots_below(const Polynomial<Int>& p, const Rational& threshold) {
  return count_roots_above(reflect(p), Rational(-threshold));
}

/// Human-readable form, e.g. "x^2 - x - 8".
template <typename Int>
std::string to_string(const Polynomial<Int>& p, const char* var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    const Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << var;
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out.str();
}

}  // namespace sgw
