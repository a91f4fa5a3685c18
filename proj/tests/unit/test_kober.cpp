#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "mvsf/errors.hpp"
#include "mvsf/kober.hpp"
#include "mvsf/multigamma.hpp"

using namespace mvsf;

namespace {

HermitianMatrix scalar(double u) { return HermitianMatrix::diagonal({u}); }

McConfig mc(std::uint64_t seed, std::uint64_t n = 200'000) { return {n, seed, 5'000}; }

// Hermitian U with eigenvalues in (lo, hi).
HermitianMatrix random_u(Rng& rng, std::size_t p, double lo, double hi) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix a(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) a(i, j) = {n(rng), n(rng)};
  const ComplexMatrix q = eigen_hermitian(HermitianMatrix(a + a.adjoint())).vectors;
  std::uniform_real_distribution<double> ev(lo, hi);
  std::vector<double> d(p);
  for (auto& v : d) v = ev(rng);
  return congruence(q, HermitianMatrix::diagonal(d));
}

void expect_agree(const KoberRequest& req, const McConfig& cfg) {
  const SeriesValue closed = kober_closed(req);
  const McEstimate num = kober_numeric(req, cfg);
  const double tol = req.u.order() == 1 ? 1e-7 : 3.0 * num.std_error;
  EXPECT_LE(std::abs(closed.value - num.value), tol + closed.tail_bound)
      << "alpha=" << req.alpha << " beta=" << req.beta << " closed=" << closed.value << " numeric=" << num.value
      << " se=" << num.std_error;
}

}  // namespace

TEST(Kober2Power, Examples) {
  EXPECT_NEAR(kober2_detpower_closed({KoberKind::second, 1.0, 1.0, DetPowerNeg{1.0}, scalar(1.0)}), 0.5, 1e-15);
  EXPECT_NEAR(kober2_detpower_closed({KoberKind::second, 2.0, 2.0, DetPowerNeg{2.0}, HermitianMatrix::identity(2)}),
              12.0 / 2880.0, 1e-15);
  const double g = kober2_detpower_closed({KoberKind::second, 1.5, 0.7, DetPowerNeg{0.4}, scalar(1.0)});
  EXPECT_NEAR(g, std::tgamma(1.1) / std::tgamma(2.6), 1e-15);
  EXPECT_THROW(kober2_detpower_closed({KoberKind::second, 2.0, 0.5, DetPowerNeg{0.4}, HermitianMatrix::identity(2)}),
               DomainError);
  EXPECT_THROW(kober2_detpower_closed({KoberKind::second, 0.5, 2.0, DetPowerNeg{2.0}, HermitianMatrix::identity(2)}),
               DomainError);
}

TEST(KoberCase1, Examples) {
  EXPECT_NEAR(kober1_case1_closed({KoberKind::first, 1.0, 0.0, DetPower{1.0}, scalar(1.0)}), 0.5, 1e-15);
  const auto half = HermitianMatrix::identity(2).scaled(0.5);
  EXPECT_NEAR(kober1_case1_closed({KoberKind::first, 2.0, 1.0, DetPower{1.0}, half}), 0.25 * 12.0 / 2880.0, 1e-15);
  // gamma = 0: no dependence on U.
  const double a = kober1_case1_closed({KoberKind::first, 2.0, 1.0, DetPower{0.0}, half});
  const double b = kober1_case1_closed({KoberKind::first, 2.0, 1.0, DetPower{0.0}, HermitianMatrix::diagonal({3.0, 0.2})});
  EXPECT_DOUBLE_EQ(a, b);
  EXPECT_THROW(kober1_case1_closed({KoberKind::first, 2.0, -0.5, DetPower{-0.6}, half}), DomainError);
}

TEST(KoberCase2, Examples) {
  const auto zero = kober1_case2_closed({KoberKind::first, 2.0, 1.0, DetOneMinusPower{0.0}, HermitianMatrix::identity(2).scaled(0.3)});
  EXPECT_NEAR(zero.value, complex_multigamma_ratio(2, 3.0, 5.0), 1e-15);

  const auto v = kober1_case2_closed({KoberKind::first, 1.0, 0.0, DetOneMinusPower{1.0}, scalar(0.5)});
  EXPECT_NEAR(v.value, -std::log(0.5) / 0.5, 1e-9 + v.tail_bound);
  EXPECT_THROW(kober1_case2_closed({KoberKind::first, 1.0, 0.0, DetOneMinusPower{1.0}, scalar(1.2)}), DomainError);
  EXPECT_THROW(kober1_case2_closed({KoberKind::first, 1.0, -1.5, DetOneMinusPower{1.0}, scalar(0.5)}), DomainError);
}

TEST(KoberCase3, Example) {
  const KoberRequest req{KoberKind::first, 1.0, 0.0, DetPowerTimesOneMinus{1.0, 1.0}, scalar(0.4)};
  // (1/u) int_0^u v / (1 - v) dv
  const double u = 0.4, oracle = (-u - std::log(1.0 - u)) / u;
  const auto c = kober1_case3_closed(req);
  EXPECT_NEAR(c.value, oracle, 1e-7 + c.tail_bound);
}

TEST(KoberCase4, Examples) {
  const auto e = kober1_case4_closed({KoberKind::first, 1.0, 0.0, HypIntegrand{{{}, {}}}, scalar(0.5)});
  EXPECT_NEAR(e.value, (std::exp(0.5) - 1.0) / 0.5, 1e-9 + e.tail_bound);
  EXPECT_NEAR(e.value, 1.297442541, 1e-9);
  // A U outside the unit interval is allowed when the series is entire.
  EXPECT_NO_THROW(kober1_case4_closed({KoberKind::first, 1.0, 0.0, HypIntegrand{{{}, {}}}, scalar(2.0)}));
  EXPECT_THROW(kober1_case4_closed({KoberKind::first, 1.0, 0.0, HypIntegrand{{{1.0}, {}}}, scalar(1.5)}), NormTooLarge);
}

TEST(KoberClosed, RejectsCustomAndMismatches) {
  KoberRequest req{KoberKind::first, 2.0, 1.0, CustomIntegrand{[](const HermitianMatrix&) { return 1.0; }},
                   HermitianMatrix::identity(2).scaled(0.5)};
  EXPECT_THROW(kober_closed(req), DomainError);
  req.f = DetPowerNeg{2.0};
  EXPECT_THROW(kober_closed(req), DomainError);
  req.kind = KoberKind::second;
  req.f = DetPower{1.0};
  EXPECT_THROW(kober_closed(req), DomainError);
}

TEST(KoberRequest, AnchorValidation) {
  EXPECT_THROW(kober_closed({KoberKind::first, 2.0, 1.0, DetPower{1.0}, HermitianMatrix::diagonal({1.0, -1.0})}),
               DomainError);
  EXPECT_THROW(kober_closed({KoberKind::first, 2.0, 1.0, DetPower{1.0}, HermitianMatrix::diagonal({1.0, 1e-7})}),
               DomainError);
}

TEST(KoberNumeric, ScalarExamples) {
  const auto k2 = kober_numeric({KoberKind::second, 1.0, 1.0, DetPowerNeg{1.0}, scalar(1.0)}, mc(1));
  EXPECT_NEAR(k2.value, 0.5, 1e-9);
  EXPECT_EQ(k2.std_error, 0.0);
  const auto k1 = kober_numeric({KoberKind::first, 1.0, 0.0, DetOneMinusPower{1.0}, scalar(0.5)}, mc(1));
  EXPECT_NEAR(k1.value, 2.0 * std::log(2.0), 1e-9);
}

TEST(KoberNumeric, MatrixExamples) {
  const auto half = HermitianMatrix::identity(2).scaled(0.5);
  const auto c1 = kober_numeric({KoberKind::first, 2.0, 1.0, DetPower{1.0}, half}, mc(2));
  EXPECT_LE(std::abs(c1.value - 0.25 * 12.0 / 2880.0), 3.0 * c1.std_error);
  const auto k2 = kober_numeric({KoberKind::second, 2.0, 2.0, DetPowerNeg{2.0}, HermitianMatrix::identity(2)}, mc(3));
  EXPECT_LE(std::abs(k2.value - 12.0 / 2880.0), 3.0 * k2.std_error);
  expect_agree({KoberKind::first, 2.0, 1.0, DetOneMinusPower{0.5}, HermitianMatrix::identity(2).scaled(0.3)}, mc(4));
}

TEST(KoberNumeric, UnsupportedOrder) {
  EXPECT_THROW(kober_numeric({KoberKind::first, 3.0, 1.0, DetPower{1.0}, HermitianMatrix::identity(3).scaled(0.5)}, mc(1)),
               UnsupportedOrder);
}

TEST(KoberNumeric, CustomIntegrand) {
  // A custom integrand equal to |det V| matches case 1 at gamma = 1.
  const auto u = HermitianMatrix::diagonal({0.6, 0.3});
  KoberRequest req{KoberKind::first, 2.0, 0.5, CustomIntegrand{[](const HermitianMatrix& v) { return abs_det(v); }}, u};
  const auto num = kober_numeric(req, mc(5));
  req.f = DetPower{1.0};
  EXPECT_LE(std::abs(num.value - kober1_case1_closed(req)), 3.0 * num.std_error);
}

// Properties.

TEST(Property, ClosedMatchesNumericScalar) {
  Rng rng = make_stream(41, 0);
  std::uniform_real_distribution<double> alpha(0.3, 3.0), weight(-0.5, 2.0), shape(0.1, 2.0), u01(0.1, 0.9),
      upos(0.2, 3.0);
  for (int t = 0; t < 10; ++t) {
    const double a = alpha(rng), b = weight(rng), g = shape(rng), d = shape(rng);
    expect_agree({KoberKind::second, a, b + 0.6, DetPowerNeg{g}, scalar(upos(rng))}, mc(1));
    expect_agree({KoberKind::first, a, b, DetPower{g}, scalar(upos(rng))}, mc(1));
    expect_agree({KoberKind::first, a, b, DetOneMinusPower{g}, scalar(u01(rng))}, mc(1));
    expect_agree({KoberKind::first, a, b, DetPowerTimesOneMinus{g, d}, scalar(u01(rng))}, mc(1));
    expect_agree({KoberKind::first, a, b, HypIntegrand{{{g}, {d + 1.0}}}, scalar(u01(rng))}, mc(1));
  }
}

TEST(Property, ClosedMatchesNumericMatrix) {
  Rng rng = make_stream(42, 0);
  std::uniform_real_distribution<double> alpha(1.6, 3.0), weight(0.0, 1.5), shape(0.2, 1.5);
  std::uint64_t seed = 500;
  for (int t = 0; t < 3; ++t) {
    const double a = alpha(rng), b = weight(rng), g = shape(rng), d = shape(rng);
    expect_agree({KoberKind::second, a, b + 1.0, DetPowerNeg{g}, random_u(rng, 2, 0.5, 2.0)}, mc(seed++));
    expect_agree({KoberKind::first, a, b, DetPower{g}, random_u(rng, 2, 0.5, 2.0)}, mc(seed++));
    expect_agree({KoberKind::first, a, b, DetOneMinusPower{g}, random_u(rng, 2, 0.1, 0.5)}, mc(seed++));
    expect_agree({KoberKind::first, a, b, DetPowerTimesOneMinus{g, d}, random_u(rng, 2, 0.1, 0.5)}, mc(seed++));
    expect_agree({KoberKind::first, a, b, HypIntegrand{{{g}, {d + 1.0}}}, random_u(rng, 2, 0.1, 0.5)}, mc(seed++));
  }
}

TEST(Property, Case1HomogeneousInU) {
  Rng rng = make_stream(43, 0);
  const double gamma = 0.8;
  const double ref = complex_multigamma_ratio(2, 1.0 + gamma + 2.0, 2.5 + 1.0 + gamma + 2.0);
  for (int t = 0; t < 5; ++t) {
    const HermitianMatrix u = random_u(rng, 2, 0.2, 4.0);
    const double v = kober1_case1_closed({KoberKind::first, 2.5, 1.0, DetPower{gamma}, u});
    EXPECT_NEAR(v / std::pow(abs_det(u), gamma) / ref, 1.0, 1e-12);
  }
}

TEST(Property, CaseLattice) {
  Rng rng = make_stream(44, 0);
  for (std::size_t p = 1; p <= 3; ++p)
    for (int t = 0; t < 5; ++t) {
      const HermitianMatrix u = random_u(rng, p, 0.1, 0.6);
      const double a = p + 0.5, b = 0.7, g = 0.9, d = 1.3;
      const auto c3d0 = kober1_case3_closed({KoberKind::first, a, b, DetPowerTimesOneMinus{g, 0.0}, u});
      const double c1 = kober1_case1_closed({KoberKind::first, a, b, DetPower{g}, u});
      EXPECT_LE(std::abs(c3d0.value - c1), c3d0.tail_bound + 1e-14 * std::abs(c1));

      const auto c3g0 = kober1_case3_closed({KoberKind::first, a, b, DetPowerTimesOneMinus{0.0, d}, u});
      const auto c2 = kober1_case2_closed({KoberKind::first, a, b, DetOneMinusPower{d}, u});
      EXPECT_LE(std::abs(c3g0.value - c2.value), c3g0.tail_bound + c2.tail_bound + 1e-14 * std::abs(c2.value));

      const auto c4 = kober1_case4_closed({KoberKind::first, a, b, HypIntegrand{{{d}, {}}}, u});
      EXPECT_LE(std::abs(c4.value - c2.value), c4.tail_bound + c2.tail_bound + 1e-14 * std::abs(c2.value));
    }
}

TEST(Property, ScalarTextbookForms) {
  // Classical scalar Kober operators, integrated independently of the library.
  boost::math::quadrature::tanh_sinh<double> ts;
  Rng rng = make_stream(45, 0);
  std::uniform_real_distribution<double> alpha(0.5, 3.0), beta(0.0, 2.0), shape(0.2, 2.0), upos(0.3, 2.0);
  for (int t = 0; t < 10; ++t) {
    const double a = alpha(rng), b = beta(rng), g = shape(rng), u = upos(rng);
    // v = u t on the first kind, v = u + w on the second.
    const double k1 = std::pow(u, -a - b) / std::tgamma(a) * u *
                      ts.integrate(
                          [&](double t, double tc) {
                            const double s = tc > 0.0 ? tc : 1.0 - t;
                            return std::pow(u * t, b + g) * std::pow(u * s, a - 1.0);
                          },
                          0.0, 1.0);
    EXPECT_NEAR(kober1_case1_closed({KoberKind::first, a, b, DetPower{g}, scalar(u)}) / k1, 1.0, 1e-7);

    const double k2 = std::pow(u, b) / std::tgamma(a) *
                      ts.integrate([&](double w) { return std::pow(u + w, -b - a - g) * std::pow(w, a - 1.0); }, 0.0,
                                   std::numeric_limits<double>::infinity());
    EXPECT_NEAR(kober2_detpower_closed({KoberKind::second, a, b, DetPowerNeg{g}, scalar(u)}) / k2, 1.0, 1e-7);
  }
}
