#pragma once

#include <cstddef>

#include "mvsf/hermitian.hpp"
#include "mvsf/monte_carlo.hpp"

namespace mvsf {

struct QuadratureSpec {
  int nodes_per_axis = 64;
  /// Upper cutoff R for the semi-infinite axes.
  double radial_truncation = 40.0;
};

struct QuadratureResult {
  double value;
  /// |I(n) - I(n/2)|: the change from halving the node count.
  double error_estimate;
};

// Explicit p = 2 reductions. Each integrand is the original matrix
// integrand, rebuilt from the matrix entries at every node, times the
// Jacobian of the substitution chain. All four throw DomainError outside
// their parameter domain and NonconvergedQuadrature when halving the nodes
// moves the result by more than 1e-6 relative (or, for the gamma
// integrals, when the truncated tail exceeds 1e-12 relative).

/// Real symmetric X > O, coordinates (x1, x3, r) with x2 = sqrt(x1 x3) r.
QuadratureResult gamma_integral_real_p2(double alpha, const QuadratureSpec& q = {});

/// Hermitian X > O, coordinates (x1, x3, r, theta) with
/// x2 + i y2 = sqrt(x1 x3) r e^{i theta}.
QuadratureResult gamma_integral_complex_p2(double alpha, const QuadratureSpec& q = {});

/// Real O < X < I, coordinates (x3, z, v): z = x2 / sqrt(x3 (1 - x3)),
/// u = x1 - x2^2 / x3 = b v with b = 1 - z^2.
QuadratureResult beta_integral_real_p2(double alpha, double beta, const QuadratureSpec& q = {});

/// Hermitian O < X < I, coordinates (x3, r, theta, v): z1 + i z2 = r e^{i theta}
/// with (x2, y2) = sqrt(x3 (1 - x3)) (z1, z2), u = b v, b = 1 - r^2.
QuadratureResult beta_integral_complex_p2(double alpha, double beta, const QuadratureSpec& q = {});

/// Integral over X > O of |det X|^(alpha - p) etr(-X), by importance
/// sampling from the triangular-factor sampler. p in {1, 2, 3}.
McEstimate mc_gamma_integral(int p, double alpha, const McConfig& cfg);

enum class BetaRepresentation {
  type1,  // integral over O < X < I of |det X|^(a-p) |det(I-X)|^(b-p)
  type2,  // integral over U > O of |det U|^(a-p) |det(I+U)|^(-(a+b))
};

/// type1 samples the box {diag in (0,1), off-diagonal re/im in (-1/2,1/2)},
/// which contains O < X < I, and rejects outside it. type2 samples the
/// Cholesky factor of U on a unit box through t = s/(1-s) (diagonal) and
/// t = w/(1-w^2) (off-diagonal parts), weighting by the triangular-factor
/// Jacobian. Throws RejectionTooLow when type1 accepts fewer than 0.1%.
McEstimate mc_beta_integral(int p, double alpha, double beta, BetaRepresentation rep, const McConfig& cfg);

/// Real symmetric counterpart of the type1 estimator: integral over
/// O < X < I of det(X)^(a-(p+1)/2) det(I-X)^(b-(p+1)/2) on the box with
/// diagonal in (0,1) and off-diagonal entries in (-1/2,1/2).
McEstimate mc_beta_integral_real(int p, double alpha, double beta, const McConfig& cfg);

/// Uniform draw from the box that contains {O < X < I}; see mc_beta_integral.
HermitianMatrix draw_unit_box(Rng& rng, std::size_t p);

/// Volume of that box in Hermitian coordinates (it is 1 for every p).
double unit_box_volume(std::size_t p);

/// O < X < I.
bool in_unit_interval(const HermitianMatrix& x);

/// Throws RejectionTooLow when accepted / total < 1e-3.
void require_acceptance(std::uint64_t accepted, std::uint64_t total, const char* what);

}  // namespace mvsf
