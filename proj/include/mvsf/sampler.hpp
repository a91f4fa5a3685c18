#pragma once

#include <cstdint>
#include <vector>

#include "mvsf/hermitian.hpp"
#include "mvsf/monte_carlo.hpp"

namespace mvsf {

/// Complex matrix-variate gamma law with density
///   |det B|^alpha / Gamma~_p(alpha) * |det X|^(alpha - p) * etr(-B X),  X > O.
struct MatrixGammaParams {
  double alpha;
  HermitianMatrix b;

  int order() const { return static_cast<int>(b.order()); }
};

/// Throws DomainError unless alpha > p - 1 and B is positive definite.
void validate(const MatrixGammaParams& params);

/// The density above; zero when X is not positive definite.
double density(const MatrixGammaParams& params, const HermitianMatrix& x);

struct MatrixGammaDraw {
  HermitianMatrix x;
  /// Factor with B^{1/2} X B^{1/2} = T T*.
  LowerTriangular t;
  /// Log density of x, computed from the scalar laws of the entries of T and
  /// the triangular-factor Jacobian. It does not go through Gamma~_p.
  double log_density;
};

/// Triangular-factor sampler: t_jj^2 ~ Gamma(alpha - j + 1, 1) for
/// j = 1..p and strict-lower entries with independent N(0, 1/2) real and
/// imaginary parts; X = B^{-1/2} T T* B^{-1/2}.
class MatrixGammaSampler {
 public:
  explicit MatrixGammaSampler(MatrixGammaParams params);

  MatrixGammaDraw draw(Rng& rng) const;
  const MatrixGammaParams& params() const noexcept { return params_; }

 private:
  MatrixGammaParams params_;
  HermitianMatrix b_inv_sqrt_;
  double log_det_b_;
};

/// Reproducible stream of draws indexed by (seed, stream).
class MatrixGammaStream {
 public:
  MatrixGammaStream(MatrixGammaParams params, std::uint64_t seed, std::uint64_t stream = 0);

  HermitianMatrix next() { return next_draw().x; }
  MatrixGammaDraw next_draw() { return sampler_.draw(rng_); }

 private:
  MatrixGammaSampler sampler_;
  Rng rng_;
};

/// Proposal used for importance sampling against a gamma-type target of
/// shape alpha and scale B: a lighter shape and a 0.8 B rate, so that the
/// weight |det X|^(alpha - alpha0) etr(-0.2 B X) stays bounded.
MatrixGammaParams importance_proposal(double alpha, const HermitianMatrix& b);

/// Importance-sampling estimate of the integral of density(params, .)
/// over X > O. Should bracket 1. Requires p in {1, 2, 3}.
McEstimate normalization_check(const MatrixGammaParams& params, const McConfig& cfg);

/// Sample mean of the Hermitian coordinates of X (see
/// HermitianMatrix::coordinates) over cfg.samples draws, one estimate per
/// coordinate with batch-means standard errors. E[X] = alpha B^{-1}.
std::vector<McEstimate> empirical_mean(const MatrixGammaParams& params, const McConfig& cfg);

}  // namespace mvsf
