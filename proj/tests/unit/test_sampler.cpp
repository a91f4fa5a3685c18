#include <gtest/gtest.h>

#include <algorithm>
#include <boost/math/distributions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "mvsf/errors.hpp"
#include "mvsf/sampler.hpp"

using namespace mvsf;

namespace {

// Asymptotic Kolmogorov tail probability P(K > lambda).
double kolmogorov_q(double lambda) {
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) sum += (k % 2 ? 2.0 : -2.0) * std::exp(-2.0 * k * k * lambda * lambda);
  return std::clamp(sum, 0.0, 1.0);
}

double ks_two_sample_p(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  const double ne = double(a.size()) * b.size() / (a.size() + b.size());
  return kolmogorov_q((std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d);
}

template <class Cdf>
double ks_one_sample_p(std::vector<double> a, Cdf cdf) {
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = cdf(a[i]);
    d = std::max({d, std::abs((i + 1) / n - f), std::abs(f - i / n)});
  }
  return kolmogorov_q((std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n)) * d);
}

McConfig small(std::uint64_t seed, std::uint64_t n = 100'000) { return {n, seed, 2'000}; }

}  // namespace

TEST(Density, Examples) {
  const MatrixGammaParams exp1{1.0, HermitianMatrix::identity(1)};
  EXPECT_NEAR(density(exp1, HermitianMatrix::diagonal({0.7})), std::exp(-0.7), 1e-15);
  const MatrixGammaParams p2{2.0, HermitianMatrix::identity(2)};
  EXPECT_NEAR(density(p2, HermitianMatrix::identity(2)), 0.0430785586036972596, 1e-15);
  EXPECT_EQ(density(p2, HermitianMatrix::diagonal({1.0, -1.0})), 0.0);
  EXPECT_THROW(density({1.0, HermitianMatrix::identity(2)}, HermitianMatrix::identity(2)), DomainError);
  EXPECT_THROW(density({3.0, HermitianMatrix::diagonal({1.0, -1.0})}, HermitianMatrix::identity(2)), DomainError);
}

TEST(Sampler, DrawsArePositiveDefinite) {
  const MatrixGammaParams params{3.0, HermitianMatrix{{2.0, {0.5, 0.5}}, {{0.5, -0.5}, 1.0}}};
  MatrixGammaStream stream(params, 1);
  for (int k = 0; k < 2'000; ++k) {
    const auto d = stream.next_draw();
    EXPECT_GT(density(params, d.x), 0.0);
    // The log density from the factor laws matches the closed density.
    EXPECT_NEAR(d.log_density, std::log(density(params, d.x)), 1e-9);
  }
}

TEST(Sampler, StreamIsReproducible) {
  const MatrixGammaParams params{2.5, HermitianMatrix::identity(2)};
  MatrixGammaStream a(params, 42, 3), b(params, 42, 3), c(params, 42, 4);
  for (int k = 0; k < 10; ++k) {
    const auto xa = a.next().coordinates(), xb = b.next().coordinates(), xc = c.next().coordinates();
    EXPECT_EQ(xa, xb);
    EXPECT_NE(xa, xc);
  }
}

TEST(Sampler, ScalarIsExponential) {
  const MatrixGammaParams params{1.0, HermitianMatrix::identity(1)};
  const auto mean = empirical_mean(params, {1'000'000, 3, 10'000});
  ASSERT_EQ(mean.size(), 1u);
  EXPECT_LE(std::abs(mean[0].value - 1.0), 3.0 * mean[0].std_error);
}

TEST(Sampler, MeanIsAlphaTimesIdentity) {
  const MatrixGammaParams params{3.0, HermitianMatrix::identity(2)};
  const auto mean = empirical_mean(params, {1'000'000, 4, 10'000});
  const std::vector<double> expected{3.0, 3.0, 0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LE(std::abs(mean[i].value - expected[i]), 3.0 * mean[i].std_error) << i;
}

TEST(Normalization, Examples) {
  for (auto [p, alpha] : {std::pair{1, 2.0}, std::pair{2, 3.0}}) {
    const auto e = normalization_check({alpha, HermitianMatrix::identity(p)}, small(10 + p));
    EXPECT_LE(std::abs(e.value - 1.0), 3.0 * e.std_error) << p;
  }
  const auto e = normalization_check({3.0, HermitianMatrix::diagonal({2.0, 1.0})}, small(13));
  EXPECT_LE(std::abs(e.value - 1.0), 3.0 * e.std_error);
  EXPECT_THROW(normalization_check({4.0, HermitianMatrix::identity(4)}, small(1)), UnsupportedOrder);
}

TEST(Property, ScaleCovariance) {
  // X ~ (alpha, I) gives S X S* ~ (alpha, (S S*)^{-1}).
  const ComplexMatrix s{{1.5, 0.0}, {{0.3, 0.4}, 0.8}};
  const HermitianMatrix b = inverse(HermitianMatrix(s * s.adjoint()));
  MatrixGammaStream base({3.0, HermitianMatrix::identity(2)}, 7);
  MatrixGammaStream scaled({3.0, b}, 8);
  std::vector<double> ta, tb;
  for (int k = 0; k < 100'000; ++k) {
    ta.push_back(congruence(s, base.next()).trace());
    tb.push_back(scaled.next().trace());
  }
  EXPECT_GT(ks_two_sample_p(ta, tb), 0.001);
}

TEST(Property, DiagonalFactorShapes) {
  // t_11^2 ~ gamma(alpha) at p = 1 and p = 2; t_22^2 ~ gamma(alpha - 1) at p = 2.
  for (int p = 1; p <= 2; ++p) {
    const double alpha = 2.5;
    MatrixGammaStream stream({alpha, HermitianMatrix::identity(p)}, 20 + p);
    std::vector<double> t11, t22;
    for (int k = 0; k < 50'000; ++k) {
      const auto d = stream.next_draw();
      t11.push_back(d.t.diag(0) * d.t.diag(0));
      if (p == 2) t22.push_back(d.t.diag(1) * d.t.diag(1));
    }
    const boost::math::gamma_distribution<double> g1(alpha), g2(alpha - 1.0);
    EXPECT_GT(ks_one_sample_p(t11, [&](double x) { return cdf(g1, x); }), 0.001);
    if (p == 2) EXPECT_GT(ks_one_sample_p(t22, [&](double x) { return cdf(g2, x); }), 0.001);
  }
}

TEST(Importance, ProposalShape) {
  const auto q = importance_proposal(3.0, HermitianMatrix::identity(2));
  EXPECT_NEAR(q.alpha, 2.5, 1e-15);
  EXPECT_NEAR(q.b(0, 0).real(), 0.8, 1e-15);
  // Near the domain edge the shape stays inside the domain.
  EXPECT_GT(importance_proposal(1.1, HermitianMatrix::identity(2)).alpha, 1.0);
}
