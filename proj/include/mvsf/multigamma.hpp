#pragma once

namespace mvsf {

/// Argument of a matrix-variate gamma function of order p. Parameters are
/// real throughout the library.
struct GammaArg {
  double alpha;
  int p;
};

struct BetaArgs {
  double alpha;
  double beta;
  int p;
};

/// pi^(p(p-1)/2) * prod_{j=0}^{p-1} Gamma(alpha - j), for alpha > p - 1.
double complex_multigamma(GammaArg a);

/// pi^(p(p-1)/4) * prod_{j=1}^{p} Gamma(alpha - (j-1)/2), for alpha > (p-1)/2.
double real_multigamma(GammaArg a);

/// Gamma~_p(alpha) Gamma~_p(beta) / Gamma~_p(alpha + beta).
double complex_matrix_beta(BetaArgs b);

/// Gamma_p(alpha) Gamma_p(beta) / Gamma_p(alpha + beta).
double real_matrix_beta(BetaArgs b);

/// Gamma~_p(num) / Gamma~_p(den). Evaluated factor by factor so that large
/// arguments do not overflow; both arguments must exceed p - 1.
double complex_multigamma_ratio(int p, double num, double den);

}  // namespace mvsf
