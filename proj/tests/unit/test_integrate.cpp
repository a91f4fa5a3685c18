#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mvsf/errors.hpp"
#include "mvsf/integrate.hpp"
#include "mvsf/multigamma.hpp"

using namespace mvsf;
using std::numbers::pi;

namespace {

McConfig small(std::uint64_t seed, std::uint64_t n = 100'000) { return {n, seed, 2'000}; }

void expect_within(const McEstimate& e, double target, double k = 3.0) {
  EXPECT_LE(std::abs(e.value - target), k * e.std_error + 1e-12) << "estimate " << e.value << " +- " << e.std_error;
}

}  // namespace

TEST(QuadratureGamma, RealExamples) {
  EXPECT_NEAR(gamma_integral_real_p2(2.0).value / (pi / 2.0), 1.0, 1e-5);
  EXPECT_NEAR(gamma_integral_real_p2(3.0).value / (1.5 * pi), 1.0, 1e-5);
  EXPECT_NEAR(gamma_integral_real_p2(1.6).value / real_multigamma({1.6, 2}), 1.0, 1e-5);
}

TEST(QuadratureGamma, ComplexExamples) {
  EXPECT_NEAR(gamma_integral_complex_p2(3.0).value / (2.0 * pi), 1.0, 1e-5);
  EXPECT_NEAR(gamma_integral_complex_p2(2.0).value / pi, 1.0, 1e-5);
  EXPECT_NEAR(gamma_integral_complex_p2(4.5).value / 121.442397904029217, 1.0, 1e-5);
}

TEST(QuadratureBeta, RealExamples) {
  EXPECT_NEAR(beta_integral_real_p2(1.5, 1.5).value / (pi / 6.0), 1.0, 1e-5);
  EXPECT_NEAR(beta_integral_real_p2(2.0, 2.0).value / 0.0698131700797731831, 1.0, 1e-5);
  EXPECT_NEAR(beta_integral_real_p2(2.0, 1.5).value / real_matrix_beta({2.0, 1.5, 2}), 1.0, 1e-5);
}

TEST(QuadratureBeta, ComplexExamples) {
  EXPECT_NEAR(beta_integral_complex_p2(2.0, 2.0).value / (pi / 12.0), 1.0, 1e-5);
  EXPECT_NEAR(beta_integral_complex_p2(3.0, 2.0).value / (pi / 72.0), 1.0, 1e-5);
  EXPECT_NEAR(beta_integral_complex_p2(2.5, 2.5).value / complex_matrix_beta({2.5, 2.5, 2}), 1.0, 1e-5);
}

TEST(Quadrature, ConvergenceCertificate) {
  // The reported change from halving the nodes is the certificate.
  const auto r = gamma_integral_complex_p2(3.0);
  EXPECT_LT(r.error_estimate, 1e-6 * r.value);
  const auto b = beta_integral_real_p2(1.5, 1.5);
  EXPECT_LT(b.error_estimate, 1e-6 * b.value);
}

TEST(Quadrature, Domain) {
  EXPECT_THROW(gamma_integral_real_p2(0.5), DomainError);
  EXPECT_THROW(gamma_integral_complex_p2(1.0), DomainError);
  EXPECT_THROW(beta_integral_real_p2(0.4, 2.0), DomainError);
  EXPECT_THROW(beta_integral_complex_p2(2.0, 1.0), DomainError);
  EXPECT_THROW(gamma_integral_complex_p2(3.0, {8, 40.0}), DomainError);
}

TEST(Quadrature, TruncationTooShortReported) {
  // At alpha = 40 the mass beyond R = 40 is far above 1e-12.
  EXPECT_THROW(gamma_integral_complex_p2(40.0, {64, 40.0}), NonconvergedQuadrature);
}

TEST(Quadrature, UnderResolvedReported) {
  // Near the domain edge the beta kernel is too singular for 16 nodes.
  EXPECT_THROW(beta_integral_complex_p2(1.02, 1.02, {16, 40.0}), NonconvergedQuadrature);
}

TEST(MonteCarloGamma, Examples) {
  expect_within(mc_gamma_integral(1, 2.0, small(1)), 1.0);
  expect_within(mc_gamma_integral(2, 3.0, small(2)), 2.0 * pi);
  expect_within(mc_gamma_integral(3, 4.0, small(3)), 372.075320163597842);
  EXPECT_THROW(mc_gamma_integral(2, 1.0, small(1)), DomainError);
  EXPECT_THROW(mc_gamma_integral(4, 5.0, small(1)), DomainError);
}

TEST(MonteCarloBeta, Examples) {
  expect_within(mc_beta_integral(1, 1.0, 1.0, BetaRepresentation::type1, small(4)), 1.0, 3.0);
  expect_within(mc_beta_integral(2, 2.0, 2.0, BetaRepresentation::type1, small(5)), pi / 12.0);
  expect_within(mc_beta_integral(2, 2.0, 2.0, BetaRepresentation::type2, small(6)), pi / 12.0);
  expect_within(mc_beta_integral_real(2, 1.5, 1.5, small(7)), pi / 6.0);
  EXPECT_THROW(mc_beta_integral(2, 1.0, 2.0, BetaRepresentation::type1, small(1)), DomainError);
}

TEST(MonteCarloBeta, ScalarUniformIsExact) {
  // At p = 1, alpha = beta = 1 every accepted draw has weight 1.
  const auto e = mc_beta_integral(1, 1.0, 1.0, BetaRepresentation::type1, small(8));
  EXPECT_NEAR(e.value, 1.0, 1e-12);
}

TEST(MonteCarlo, Reproducible) {
  const auto a = mc_gamma_integral(2, 3.0, small(9, 20'000));
  const auto b = mc_gamma_integral(2, 3.0, small(9, 20'000));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
}

TEST(MonteCarlo, RejectsTooFewSamples) {
  EXPECT_THROW(mc_gamma_integral(1, 2.0, {100, 0, 10}), DomainError);
}

TEST(Acceptance, RejectionTooLowRaised) {
  EXPECT_THROW(require_acceptance(9, 10'000, "test"), RejectionTooLow);
  EXPECT_NO_THROW(require_acceptance(10, 10'000, "test"));
}

TEST(UnitBox, ContainsTheInterval) {
  // Every O < X < I has diagonal in (0,1) and |x_ij| < 1/2; sample inside
  // the interval via X = diag + small off-diagonal and check the box bounds.
  Rng rng = make_stream(10, 0);
  int inside = 0;
  for (int k = 0; k < 20'000; ++k) {
    const HermitianMatrix x = draw_unit_box(rng, 3);
    if (!in_unit_interval(x)) continue;
    ++inside;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_LT(std::abs(x(i, j).real()), 0.5);
        EXPECT_LT(std::abs(x(i, j).imag()), 0.5);
      }
  }
  EXPECT_GT(inside, 0);
  EXPECT_EQ(unit_box_volume(3), 1.0);
}

// Invariants.

TEST(Property, QuadratureAgreesWithMonteCarlo) {
  const struct {
    double a, b;
  } points[] = {{2.0, 2.0}, {3.0, 2.0}, {2.5, 2.5}};
  int seed = 100;
  for (const auto& pt : points) {
    const double quad = beta_integral_complex_p2(pt.a, pt.b).value;
    const auto e = mc_beta_integral(2, pt.a, pt.b, BetaRepresentation::type1, small(seed++));
    EXPECT_LE(std::abs(quad - e.value), std::max(3.0 * e.std_error, 1e-4 * quad));
  }
}

TEST(Property, TwoSeedsAgree) {
  const auto a = mc_gamma_integral(2, 3.0, small(201));
  const auto b = mc_gamma_integral(2, 3.0, small(202));
  EXPECT_NE(a.value, b.value);
  EXPECT_LT(std::abs(a.value - b.value), 6.0 * std::hypot(a.std_error, b.std_error));
}

TEST(Property, RepresentationsAgree) {
  Rng params = make_stream(300, 0);
  std::uniform_real_distribution<double> shift(0.3, 2.0);
  for (int k = 0; k < 10; ++k) {
    for (int p = 1; p <= 2; ++p) {
      const double a = p - 1 + shift(params), b = p - 1 + shift(params);
      const auto t1 = mc_beta_integral(p, a, b, BetaRepresentation::type1, small(400 + 2 * k + 20 * p));
      const auto t2 = mc_beta_integral(p, a, b, BetaRepresentation::type2, small(401 + 2 * k + 20 * p));
      EXPECT_LE(std::abs(t1.value - t2.value), 3.0 * std::hypot(t1.std_error, t2.std_error))
          << "p=" << p << " alpha=" << a << " beta=" << b;
    }
  }
}
