#include "mvsf/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "mvsf/errors.hpp"

namespace mvsf {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  return rule;
}

AxisNodes axis_nodes(const Axis& axis, std::size_t n) {
  const auto rule = gauss_legendre(n);
  const double len = axis.hi - axis.lo;
  AxisNodes out{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = 0.5 * (rule.nodes[i] + 1.0);
    const double wu = 0.5 * rule.weights[i];
    double x = 0.0, jac = 0.0;
    switch (axis.clustering) {
      case Clustering::none:
        x = u;
        jac = 1.0;
        break;
      case Clustering::lower:
        x = u * u * u * u;
        jac = 4.0 * u * u * u;
        break;
      case Clustering::both: {
        const double u2 = u * u, u3 = u2 * u, v = 1.0 - u;
        x = u3 * u * (35.0 - 84.0 * u + 70.0 * u2 - 20.0 * u3);
        jac = 140.0 * u3 * v * v * v;
        break;
      }
    }
    out.x[i] = axis.lo + len * x;
    out.w[i] = wu * len * jac;
  }
  return out;
}

}  // namespace mvsf
