#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mvsf/errors.hpp"
#include "mvsf/multigamma.hpp"

using namespace mvsf;
using std::numbers::pi;

// Reference values computed to 30 digits with mpmath.

TEST(ComplexMultigamma, Examples) {
  EXPECT_NEAR(complex_multigamma({3.0, 2}), 2.0 * pi, 1e-13);
  EXPECT_NEAR(complex_multigamma({4.5, 2}), 121.442397904029217, 1e-10);
  EXPECT_NEAR(complex_multigamma({4.0, 3}), 372.075320163597842, 1e-10);
  EXPECT_NEAR(complex_multigamma({5.0, 1}), 24.0, 1e-12);
}

TEST(RealMultigamma, Examples) {
  EXPECT_NEAR(real_multigamma({2.0, 2}), pi / 2.0, 1e-14);
  EXPECT_NEAR(real_multigamma({3.0, 1}), 2.0, 1e-14);
}

TEST(MatrixBeta, Examples) {
  EXPECT_NEAR(complex_matrix_beta({2.0, 2.0, 2}), pi / 12.0, 1e-15);
  EXPECT_NEAR(real_matrix_beta({1.5, 1.5, 2}), 0.523598775598298873, 1e-15);
  EXPECT_NEAR(real_matrix_beta({2.0, 2.0, 2}), 0.0698131700797731831, 1e-15);
  EXPECT_NEAR(complex_matrix_beta({3.0, 2.0, 1}), 1.0 / 12.0, 1e-15);
}

TEST(Domain, Rejected) {
  EXPECT_THROW(complex_multigamma({1.0, 2}), DomainError);
  EXPECT_THROW(complex_multigamma({0.5, 2}), DomainError);
  EXPECT_THROW(real_multigamma({0.5, 2}), DomainError);
  EXPECT_NO_THROW(real_multigamma({0.6, 2}));
  EXPECT_THROW(complex_matrix_beta({2.0, 1.0, 2}), DomainError);
  EXPECT_THROW(complex_multigamma({std::nan(""), 1}), DomainError);
  EXPECT_THROW(complex_multigamma({2.0, 0}), DomainError);
}

TEST(Property, BetaSymmetric) {
  for (int p = 1; p <= 4; ++p)
    for (double a = p - 0.5; a < p + 5.0; a += 0.7)
      for (double b = p - 0.3; b < p + 5.0; b += 0.9) {
        EXPECT_EQ(complex_matrix_beta({a, b, p}), complex_matrix_beta({b, a, p}));
        EXPECT_EQ(real_matrix_beta({a, b, p}), real_matrix_beta({b, a, p}));
      }
}

TEST(Property, ComplexRecurrence) {
  // G~_p(a) = pi^{p-1} Gamma(a) G~_{p-1}(a - 1).
  for (int p = 2; p <= 4; ++p)
    for (double a = p - 0.5; a < p + 6.0; a += 0.37) {
      const double lhs = complex_multigamma({a, p});
      const double rhs = std::pow(pi, p - 1) * std::tgamma(a) * complex_multigamma({a - 1.0, p - 1});
      EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
    }
}

TEST(Property, RealRecurrence) {
  // G_p(a) = pi^{(p-1)/2} Gamma(a) G_{p-1}(a - 1/2).
  for (int p = 2; p <= 4; ++p)
    for (double a = 0.5 * p; a < p + 6.0; a += 0.41) {
      const double lhs = real_multigamma({a, p});
      const double rhs = std::pow(pi, 0.5 * (p - 1)) * std::tgamma(a) * real_multigamma({a - 0.5, p - 1});
      EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
    }
}

TEST(Property, RatioMatchesQuotient) {
  for (int p = 1; p <= 3; ++p)
    for (double a = p; a < p + 4.0; a += 0.5) {
      const double ratio = complex_multigamma_ratio(p, a, a + 1.5);
      EXPECT_NEAR(ratio / (complex_multigamma({a, p}) / complex_multigamma({a + 1.5, p})), 1.0, 1e-12);
    }
}

TEST(LargeArguments, StayFinite) {
  const double r = complex_multigamma_ratio(2, 200.0, 201.0);
  EXPECT_TRUE(std::isfinite(r));
  EXPECT_NEAR(r, 1.0 / (200.0 * 199.0), 1e-16);
  EXPECT_NEAR(complex_matrix_beta({150.0, 150.0, 1}), std::exp(2 * std::lgamma(150.0) - std::lgamma(300.0)),
              1e-12 * complex_matrix_beta({150.0, 150.0, 1}));
}
