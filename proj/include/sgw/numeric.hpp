#pragma once

#include "sgw/signed_graph.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace sgw {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
/// Iterates until the off-diagonal Frobenius norm drops below `off_tol`.
/// Returned unsorted, in diagonal order.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> jacobi_eigenvalues(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a, Scalar off_tol = Scalar(1e-12),
    int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = a.rows();
  auto off_norm = [&] {
    Scalar s = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) s += 2 * a(i, j) * a(i, j);
    return sqrt(s);
  };
  for (int sweep = 0; sweep < max_sweeps && off_norm() >= off_tol; ++sweep) {
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                         (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  return a.diagonal();
}

struct NumericSpectrum {
  std::vector<double> values;  // descending
  double tol = 1e-7;
};

/// Floating-point spectrum for display and cross-checks only.
NumericSpectrum eigenvalues(const SignedGraph& g, double tol = 1e-7);

/// Exponent notation: the -1 and 1 groups first, then the remaining
/// distinct values ascending, e.g. "{-1^3, 1^2, -2.7016, 3.7016}".
std::string pretty_spectrum(const NumericSpectrum& s);

}  // namespace sgw
