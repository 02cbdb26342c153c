#include "sgw/numeric.hpp"

#include <cstdio>
#include <functional>

namespace sgw {

NumericSpectrum eigenvalues(const SignedGraph& g, double tol) {
  const Eigen::VectorXd ev = jacobi_eigenvalues<double>(g.adjacency<double>());
  NumericSpectrum s;
  s.tol = tol;
  s.values.assign(ev.data(), ev.data() + ev.size());
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

namespace {

std::string format_value(double v, double tol) {
  const double r = std::round(v);
  if (std::abs(v - r) <= tol) {
    return std::to_string(static_cast<long long>(r));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::string pretty_spectrum(const NumericSpectrum& s) {
  struct Group {
    double value;
    int count;
  };
  std::vector<double> sorted(s.values);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Group> groups;
  for (double v : sorted) {
    if (!groups.empty() && std::abs(v - groups.back().value) <= s.tol) {
      ++groups.back().count;
    } else {
      groups.push_back({v, 1});
    }
  }
  auto is_pm1 = [&](const Group& g, double target) { return std::abs(g.value - target) <= s.tol; };
  std::vector<Group> ordered;
  for (const auto& g : groups) if (is_pm1(g, -1.0)) ordered.push_back(g);
  for (const auto& g : groups) if (is_pm1(g, 1.0)) ordered.push_back(g);
  for (const auto& g : groups) if (!is_pm1(g, -1.0) && !is_pm1(g, 1.0)) ordered.push_back(g);

  std::string out = "{";
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i) out += ", ";
    const double v = is_pm1(ordered[i], 1.0) ? 1.0 : (is_pm1(ordered[i], -1.0) ? -1.0 : ordered[i].value);
    out += format_value(v, s.tol);
    if (ordered[i].count > 1) out += "^" + std::to_string(ordered[i].count);
  }
  return out + "}";
}

}  // namespace sgw
