#include "mvsf/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mvsf/errors.hpp"
#include "mvsf/jacobians.hpp"
#include "mvsf/multigamma.hpp"

namespace mvsf {

void validate(const MatrixGammaParams& params) {
  const int p = params.order();
  if (!std::isfinite(params.alpha) || !(params.alpha > p - 1))
    throw DomainError("matrix gamma: need alpha > p - 1 (alpha=" + std::to_string(params.alpha) + ")");
  if (!is_positive_definite(params.b)) throw DomainError("matrix gamma: B must be positive definite");
}

double density(const MatrixGammaParams& params, const HermitianMatrix& x) {
  validate(params);
  const int p = params.order();
  if (x.order() != params.b.order()) throw DomainError("density: order mismatch");
  if (!is_positive_definite(x)) return 0.0;
  double tr_bx = 0.0;
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) tr_bx += (params.b(i, k) * x(k, i)).real();
  const double log_f = params.alpha * std::log(abs_det(params.b)) + (params.alpha - p) * std::log(abs_det(x)) - tr_bx;
  return std::exp(log_f) / complex_multigamma({params.alpha, p});
}

MatrixGammaSampler::MatrixGammaSampler(MatrixGammaParams params)
    : params_(std::move(params)), b_inv_sqrt_(params_.b.order()), log_det_b_(0.0) {
  validate(params_);
  b_inv_sqrt_ = pd_inv_sqrt(params_.b);
  log_det_b_ = std::log(abs_det(params_.b));
}

MatrixGammaDraw MatrixGammaSampler::draw(Rng& rng) const {
  const std::size_t p = params_.b.order();
  const double alpha = params_.alpha;
  ComplexMatrix t(p, p);
  double log_q = 0.0;

  for (std::size_t j = 0; j < p; ++j) {
    const double shape = alpha - static_cast<double>(j);
    std::gamma_distribution<double> g(shape, 1.0);
    double sq = g(rng);
    while (!(sq > 0.0)) sq = g(rng);
    const double tjj = std::sqrt(sq);
    t(j, j) = tjj;
    log_q += std::numbers::ln2 + (2.0 * shape - 1.0) * std::log(tjj) - sq - std::lgamma(shape);
  }
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      t(i, j) = Complex(re, im);
      log_q += -std::log(std::numbers::pi) - (re * re + im * im);
    }

  LowerTriangular factor(std::move(t));
  log_q -= std::log(cholesky_jacobian(factor));
  HermitianMatrix y = factor.gram();
  HermitianMatrix x = congruence(b_inv_sqrt_.matrix(), y);
  // X = B^{-1/2} Y B^{-1/2} has dY = |det B|^p dX.
  log_q += static_cast<double>(p) * log_det_b_;
  return {std::move(x), std::move(factor), log_q};
}

MatrixGammaStream::MatrixGammaStream(MatrixGammaParams params, std::uint64_t seed, std::uint64_t stream)
    : sampler_(std::move(params)), rng_(make_stream(seed, stream)) {}

MatrixGammaParams importance_proposal(double alpha, const HermitianMatrix& b) {
  const double p = static_cast<double>(b.order());
  const double shape = alpha - std::min(0.5, 0.5 * (alpha - p + 1.0));
  return {shape, b.scaled(0.8)};
}

McEstimate normalization_check(const MatrixGammaParams& params, const McConfig& cfg) {
  validate(params);
  const int p = params.order();
  if (p < 1 || p > 3) throw UnsupportedOrder("normalization_check: p must be 1, 2 or 3");
  const MatrixGammaSampler proposal(importance_proposal(params.alpha, params.b));
  return run_monte_carlo(cfg, [&](Rng& rng, std::uint64_t count) {
           BatchResult r;
           for (std::uint64_t k = 0; k < count; ++k) {
             const auto d = proposal.draw(rng);
             r.sum += density(params, d.x) / std::exp(d.log_density);
           }
           r.accepted = count;
           return r;
         })
      .estimate;
}

std::vector<McEstimate> empirical_mean(const MatrixGammaParams& params, const McConfig& cfg) {
  validate(cfg);
  const MatrixGammaSampler sampler(params);
  const std::size_t dim = static_cast<std::size_t>(params.order() * params.order());
  const std::uint64_t n_batches = (cfg.samples + cfg.batch_size - 1) / cfg.batch_size;
  std::vector<std::vector<double>> sums(n_batches, std::vector<double>(dim, 0.0));
  std::vector<double> sizes(n_batches, 0.0);
  parallel_for(n_batches, [&](std::size_t b) {
    const std::uint64_t count = std::min(cfg.batch_size, cfg.samples - b * cfg.batch_size);
    Rng rng = make_stream(cfg.seed, b);
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto c = sampler.draw(rng).x.coordinates();
      for (std::size_t i = 0; i < dim; ++i) sums[b][i] += c[i];
    }
    sizes[b] = static_cast<double>(count);
  });

  const double n = static_cast<double>(cfg.samples);
  std::vector<McEstimate> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double total = 0.0;
    for (std::uint64_t b = 0; b < n_batches; ++b) total += sums[b][i];
    const double mean = total / n;
    double ss = 0.0;
    for (std::uint64_t b = 0; b < n_batches; ++b) {
      const double d = sums[b][i] / sizes[b] - mean;
      ss += sizes[b] * d * d;
    }
    const double se = n_batches > 1 ? std::sqrt(ss / (static_cast<double>(n_batches - 1) * n)) : 0.0;
    out[i] = {mean, se, cfg.samples};
  }
  return out;
}

}  // namespace mvsf
