#include "mvsf/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mvsf/errors.hpp"
#include "mvsf/jacobians.hpp"
#include "mvsf/quadrature.hpp"
#include "mvsf/sampler.hpp"

namespace mvsf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_spec(const QuadratureSpec& q) {
  if (q.nodes_per_axis < 16) throw DomainError("QuadratureSpec: nodes_per_axis must be >= 16");
  if (!(q.radial_truncation >= 30.0)) throw DomainError("QuadratureSpec: radial_truncation must be >= 30");
}

// Relative mass lost by cutting x1, x3 at R for the kernel (x1 x3)^(a-1) e^{-x1-x3}:
// at most 2 Gamma(a, R) / Gamma(a), with Gamma(a, R) <= R^(a-1) e^{-R} / (1 - (a-1)/R).
void check_tail(double a, double r) {
  const double shrink = 1.0 - std::max(0.0, a - 1.0) / r;
  const double bound = shrink > 0.0 ? 2.0 * std::exp((a - 1.0) * std::log(r) - r - std::lgamma(a)) / shrink : 1.0;
  if (!(bound < 1e-12))
    throw NonconvergedQuadrature("quadrature: truncation at R=" + std::to_string(r) +
                                 " leaves a relative tail above 1e-12; increase radial_truncation");
}

template <std::size_t D, class F>
QuadratureResult certified(const std::array<Axis, D>& axes, const QuadratureSpec& q, const F& f, const char* what) {
  const auto n = static_cast<std::size_t>(q.nodes_per_axis);
  const double fine = tensor_integrate(axes, n, f);
  const double coarse = tensor_integrate(axes, n / 2, f);
  const double change = std::abs(fine - coarse);
  if (!std::isfinite(fine) || change > 1e-6 * std::abs(fine))
    throw NonconvergedQuadrature(std::string(what) + ": halving the node count changed the result by " +
                                 std::to_string(change / std::abs(fine)) + " (relative)");
  return {fine, change};
}

double safe_pow(double base, double e) { return base > 0.0 ? std::pow(base, e) : 0.0; }

}  // namespace

QuadratureResult gamma_integral_real_p2(double alpha, const QuadratureSpec& q) {
  if (!(alpha > 0.5)) throw DomainError("gamma_integral_real_p2: need alpha > 1/2");
  check_spec(q);
  const double R = q.radial_truncation;
  check_tail(alpha, R);
  const std::array<Axis, 3> axes{{{0.0, R, Clustering::lower}, {0.0, R, Clustering::lower}, {-1.0, 1.0, Clustering::both}}};
  const auto f = [alpha](const std::array<double, 3>& c) {
    const double x1 = c[0], x3 = c[1], r = c[2];
    const double s = std::sqrt(x1 * x3);
    const double x2 = s * r;
    const double det = x1 * x3 - x2 * x2;
    return safe_pow(det, alpha - 1.5) * std::exp(-(x1 + x3)) * s;
  };
  return certified(axes, q, f, "gamma_integral_real_p2");
}

QuadratureResult gamma_integral_complex_p2(double alpha, const QuadratureSpec& q) {
  if (!(alpha > 1.0)) throw DomainError("gamma_integral_complex_p2: need alpha > 1");
  check_spec(q);
  const double R = q.radial_truncation;
  check_tail(alpha, R);
  const std::array<Axis, 4> axes{{{0.0, R, Clustering::lower},
                                  {0.0, R, Clustering::lower},
                                  {0.0, 1.0, Clustering::both},
                                  {0.0, kTwoPi, Clustering::none}}};
  const auto f = [alpha](const std::array<double, 4>& c) {
    const double x1 = c[0], x3 = c[1], r = c[2], theta = c[3];
    const double s = std::sqrt(x1 * x3);
    const double x2 = s * r * std::cos(theta);
    const double y2 = s * r * std::sin(theta);
    const double det = x1 * x3 - (x2 * x2 + y2 * y2);
    return safe_pow(det, alpha - 2.0) * std::exp(-(x1 + x3)) * x1 * x3 * r;
  };
  return certified(axes, q, f, "gamma_integral_complex_p2");
}

QuadratureResult beta_integral_real_p2(double alpha, double beta, const QuadratureSpec& q) {
  if (!(alpha > 0.5) || !(beta > 0.5)) throw DomainError("beta_integral_real_p2: need alpha, beta > 1/2");
  check_spec(q);
  // Outermost x3, then z, innermost v.
  const std::array<Axis, 3> axes{{{0.0, 1.0, Clustering::both}, {-1.0, 1.0, Clustering::both}, {0.0, 1.0, Clustering::both}}};
  const auto f = [alpha, beta](const std::array<double, 3>& c) {
    const double x3 = c[0], z = c[1], v = c[2];
    const double scale = std::sqrt(x3 * (1.0 - x3));
    const double x2 = z * scale;
    const double b = 1.0 - x2 * x2 / (x3 * (1.0 - x3));
    const double x1 = b * v + x2 * x2 / x3;
    const double det = x1 * x3 - x2 * x2;
    const double det_c = (1.0 - x1) * (1.0 - x3) - x2 * x2;
    // dx1 = b dv, dx2 = scale dz.
    return safe_pow(det, alpha - 1.5) * safe_pow(det_c, beta - 1.5) * b * scale;
  };
  return certified(axes, q, f, "beta_integral_real_p2");
}

QuadratureResult beta_integral_complex_p2(double alpha, double beta, const QuadratureSpec& q) {
  if (!(alpha > 1.0) || !(beta > 1.0)) throw DomainError("beta_integral_complex_p2: need alpha, beta > 1");
  check_spec(q);
  const std::array<Axis, 4> axes{{{0.0, 1.0, Clustering::both},
                                  {0.0, 1.0, Clustering::both},
                                  {0.0, kTwoPi, Clustering::none},
                                  {0.0, 1.0, Clustering::both}}};
  const auto f = [alpha, beta](const std::array<double, 4>& c) {
    const double x3 = c[0], r = c[1], theta = c[2], v = c[3];
    const double scale2 = x3 * (1.0 - x3);
    const double scale = std::sqrt(scale2);
    const double x2 = scale * r * std::cos(theta);
    const double y2 = scale * r * std::sin(theta);
    const double m = x2 * x2 + y2 * y2;
    const double b = 1.0 - m / scale2;
    const double x1 = b * v + m / x3;
    const double det = x1 * x3 - m;
    const double det_c = (1.0 - x1) * (1.0 - x3) - m;
    // dx1 = b dv, d(x2, y2) = scale^2 d(z1, z2), d(z1, z2) = r d(r, theta).
    return safe_pow(det, alpha - 2.0) * safe_pow(det_c, beta - 2.0) * b * scale2 * r;
  };
  return certified(axes, q, f, "beta_integral_complex_p2");
}

McEstimate mc_gamma_integral(int p, double alpha, const McConfig& cfg) {
  if (p < 1 || p > 3) throw DomainError("mc_gamma_integral: p must be 1, 2 or 3");
  if (!(alpha > p - 1)) throw DomainError("mc_gamma_integral: need alpha > p - 1");
  const MatrixGammaSampler proposal(importance_proposal(alpha, HermitianMatrix::identity(p)));
  return run_monte_carlo(cfg, [&](Rng& rng, std::uint64_t count) {
           BatchResult r;
           for (std::uint64_t k = 0; k < count; ++k) {
             const auto d = proposal.draw(rng);
             const double log_f = (alpha - p) * std::log(abs_det(d.x)) - d.x.trace();
             r.sum += std::exp(log_f - d.log_density);
           }
           r.accepted = count;
           return r;
         })
      .estimate;
}

HermitianMatrix draw_unit_box(Rng& rng, std::size_t p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> c(p * p);
  for (std::size_t i = 0; i < p; ++i) c[i] = unit(rng);
  for (std::size_t k = p; k < p * p; ++k) c[k] = unit(rng) - 0.5;
  return HermitianMatrix::from_coordinates(p, c);
}

double unit_box_volume(std::size_t) { return 1.0; }

bool in_unit_interval(const HermitianMatrix& x) {
  return is_positive_definite(x) && is_positive_definite(HermitianMatrix::identity(x.order()) - x);
}

void require_acceptance(std::uint64_t accepted, std::uint64_t total, const char* what) {
  if (static_cast<double>(accepted) < 1e-3 * static_cast<double>(total))
    throw RejectionTooLow(std::string(what) + ": acceptance rate below 0.1%");
}

McEstimate mc_beta_integral(int p, double alpha, double beta, BetaRepresentation rep, const McConfig& cfg) {
  if (p < 1) throw DomainError("mc_beta_integral: p must be positive");
  if (!(alpha > p - 1) || !(beta > p - 1)) throw DomainError("mc_beta_integral: need alpha, beta > p - 1");
  const auto up = static_cast<std::size_t>(p);

  if (rep == BetaRepresentation::type1) {
    const double volume = unit_box_volume(up);
    const auto run = run_monte_carlo(cfg, [&](Rng& rng, std::uint64_t count) {
      BatchResult r;
      const HermitianMatrix id = HermitianMatrix::identity(up);
      for (std::uint64_t k = 0; k < count; ++k) {
        const HermitianMatrix x = draw_unit_box(rng, up);
        if (!in_unit_interval(x)) continue;
        ++r.accepted;
        r.sum += volume * std::pow(abs_det(x), alpha - p) * std::pow(abs_det(id - x), beta - p);
      }
      return r;
    });
    require_acceptance(run.accepted, cfg.samples, "mc_beta_integral");
    return run.estimate;
  }

  // type2: U = T T*, with T's coordinates pulled back from a unit box.
  const std::size_t n_off = up * (up - 1);
  const double volume = std::pow(2.0, static_cast<double>(n_off));
  return run_monte_carlo(cfg, [&](Rng& rng, std::uint64_t count) {
           BatchResult r;
           std::uniform_real_distribution<double> unit(0.0, 1.0);
           const HermitianMatrix id = HermitianMatrix::identity(up);
           std::vector<double> coords(up * up);
           for (std::uint64_t k = 0; k < count; ++k) {
             double jac = volume;
             for (std::size_t j = 0; j < up; ++j) {
               double s = unit(rng);
               while (!(s > 0.0)) s = unit(rng);
               coords[j] = s / (1.0 - s);
               jac /= (1.0 - s) * (1.0 - s);
             }
             for (std::size_t i = up; i < up * up; ++i) {
               const double w = 2.0 * unit(rng) - 1.0;
               const double d = 1.0 - w * w;
               coords[i] = w / d;
               jac *= (1.0 + w * w) / (d * d);
             }
             const auto t = LowerTriangular::from_coordinates(up, coords);
             const HermitianMatrix u = t.gram();
             jac *= cholesky_jacobian(t);
             const double log_g = (alpha - p) * std::log(abs_det(u)) - (alpha + beta) * std::log(abs_det(id + u));
             r.sum += std::exp(log_g) * jac;
           }
           r.accepted = count;
           return r;
         })
      .estimate;
}

McEstimate mc_beta_integral_real(int p, double alpha, double beta, const McConfig& cfg) {
  if (p < 1) throw DomainError("mc_beta_integral_real: p must be positive");
  const double shift = 0.5 * (p + 1);
  const double dom = 0.5 * (p - 1);
  if (!(alpha > dom) || !(beta > dom)) throw DomainError("mc_beta_integral_real: need alpha, beta > (p - 1)/2");
  const auto up = static_cast<std::size_t>(p);
  const auto run = run_monte_carlo(cfg, [&](Rng& rng, std::uint64_t count) {
    BatchResult r;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::uint64_t k = 0; k < count; ++k) {
      SymmetricMatrix x(up), c(up);
      for (std::size_t i = 0; i < up; ++i) {
        const double d = unit(rng);
        x.set(i, i, d);
        c.set(i, i, 1.0 - d);
      }
      for (std::size_t i = 1; i < up; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          const double v = unit(rng) - 0.5;
          x.set(i, j, v);
          c.set(i, j, -v);
        }
      if (!is_positive_definite(x) || !is_positive_definite(c)) continue;
      ++r.accepted;
      r.sum += std::pow(abs_det(x), alpha - shift) * std::pow(abs_det(c), beta - shift);
    }
    return r;
  });
  require_acceptance(run.accepted, cfg.samples, "mc_beta_integral_real");
  return run.estimate;
}

}  // namespace mvsf
