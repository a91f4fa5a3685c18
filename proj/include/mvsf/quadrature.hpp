#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mvsf/monte_carlo.hpp"

namespace mvsf {

struct GaussLegendreRule {
  std::vector<double> nodes;  // on (-1, 1), ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(std::size_t n);

/// How nodes are redistributed along an axis before the Gauss-Legendre rule
/// is applied. Clustering removes algebraic endpoint singularities of the
/// gamma/beta kernels: an endpoint factor (x - lo)^s becomes t^(4s + 3)
/// in the mapped variable.
enum class Clustering {
  none,   // affine
  lower,  // x = lo + (hi - lo) u^4
  both,   // x = lo + (hi - lo) psi(u), psi' = 140 u^3 (1 - u)^3
};

struct Axis {
  double lo;
  double hi;
  Clustering clustering = Clustering::none;
};

struct AxisNodes {
  std::vector<double> x;
  std::vector<double> w;  // Gauss weight times the map derivative
};

AxisNodes axis_nodes(const Axis& axis, std::size_t n);

/// Tensor-product rule with n nodes per axis. The integrand receives the
/// mapped point; the outermost axis is spread over worker threads and
/// reduced in index order.
template <std::size_t D, class F>
double tensor_integrate(const std::array<Axis, D>& axes, std::size_t n, const F& f) {
  static_assert(D >= 1);
  std::array<AxisNodes, D> nodes;
  for (std::size_t d = 0; d < D; ++d) nodes[d] = axis_nodes(axes[d], n);

  std::vector<double> slab(n, 0.0);
  parallel_for(n, [&](std::size_t i0) {
    std::array<double, D> x{};
    std::array<std::size_t, D> idx{};
    idx[0] = i0;
    x[0] = nodes[0].x[i0];
    double sum = 0.0;
    for (;;) {
      double w = nodes[0].w[i0];
      for (std::size_t d = 1; d < D; ++d) {
        x[d] = nodes[d].x[idx[d]];
        w *= nodes[d].w[idx[d]];
      }
      sum += w * f(x);
      std::size_t d = D - 1;
      while (d >= 1) {
        if (++idx[d] < n) break;
        idx[d] = 0;
        --d;
      }
      if (d == 0) break;
    }
    slab[i0] = sum;
  });
  double total = 0.0;
  for (double s : slab) total += s;
  return total;
}

}  // namespace mvsf
