#pragma once

#include <functional>
#include <variant>

#include "mvsf/hermitian.hpp"
#include "mvsf/monte_carlo.hpp"
#include "mvsf/zonal.hpp"

namespace mvsf {

// Kober fractional integrals of order alpha for Hermitian U > O:
//
//   K2 f = |det U|^beta / G(alpha) * int_{V > U} |det V|^(-beta-alpha)
//            |det(V - U)|^(alpha - p) f(V) dV
//   K1 f = |det U|^(-alpha-beta) / G(alpha) * int_{O < V < U} |det V|^beta
//            |det(U - V)|^(alpha - p) f(V) dV
//
// with G the complex multigamma function.

enum class KoberKind { first, second };

/// f(V) = |det V|^gamma
struct DetPower {
  double gamma;
};
/// f(V) = |det V|^(-gamma)
struct DetPowerNeg {
  double gamma;
};
/// f(V) = |det(I - V)|^(-gamma)
struct DetOneMinusPower {
  double gamma;
};
/// f(V) = |det V|^gamma |det(I - V)|^(-delta)
struct DetPowerTimesOneMinus {
  double gamma;
  double delta;
};
/// f(V) = rFs(a; b; V)
struct HypIntegrand {
  HypSeriesSpec series;
};
/// Black-box f; accepted by kober_numeric only.
struct CustomIntegrand {
  std::function<double(const HermitianMatrix&)> f;
};

using IntegrandDescriptor =
    std::variant<DetPower, DetPowerNeg, DetOneMinusPower, DetPowerTimesOneMinus, HypIntegrand, CustomIntegrand>;

/// f(V) for the descriptor. HypIntegrand returns the truncated series value.
double evaluate(const IntegrandDescriptor& f, const HermitianMatrix& v);

struct KoberRequest {
  KoberKind kind = KoberKind::first;
  double alpha = 0.0;
  double beta = 0.0;
  IntegrandDescriptor f = DetPower{0.0};
  HermitianMatrix u{1};
  /// Truncation degree for the 2F1 factor of the first-kind cases 2 and 3.
  int k_max = 25;
};

/// Second kind, f = DetPowerNeg(gamma):
/// |det U|^(-gamma) G(beta + gamma) / G(alpha + beta + gamma).
/// Needs alpha > p - 1 and beta + gamma > p - 1.
double kober2_detpower_closed(const KoberRequest& req);

/// First kind, f = DetPower(gamma):
/// |det U|^gamma G(beta + gamma + p) / G(alpha + beta + gamma + p).
/// Needs beta + gamma > -1.
double kober1_case1_closed(const KoberRequest& req);

/// First kind, f = DetOneMinusPower(gamma), O < U < I:
/// G(beta + p) / G(alpha + beta + p) 2F1(beta + p, gamma; alpha + beta + p; U).
/// Needs beta > -1.
SeriesValue kober1_case2_closed(const KoberRequest& req);

/// First kind, f = DetPowerTimesOneMinus(gamma, delta), O < U < I:
/// |det U|^gamma G(beta + gamma + p) / G(alpha + beta + gamma + p)
///   2F1(beta + gamma + p, delta; alpha + beta + gamma + p; U).
/// Needs beta + gamma > -1.
SeriesValue kober1_case3_closed(const KoberRequest& req);

/// First kind, f = HypIntegrand(rFs(a; b)):
/// G(beta + p) / G(alpha + beta + p) (r+1)F(s+1)(a, beta + p; b, alpha + beta + p; U).
/// Needs beta > -1; the spectral norm of U must be < 1 when r = s + 1.
SeriesValue kober1_case4_closed(const KoberRequest& req);

/// Dispatches on (kind, integrand) to the closed forms above. Throws
/// DomainError for combinations without a closed form, Custom included.
SeriesValue kober_closed(const KoberRequest& req);

/// Direct evaluation of the defining integral.
///   p = 1: tanh-sinh quadrature after mapping to (0, 1); std_error = 0.
///     Throws NonconvergedQuadrature above 1e-9 estimated error.
///   p = 2, first kind: V = U^(1/2) W U^(1/2), W uniform on the box that
///     contains O < W < I, rejection outside.
///   p = 2, second kind: V = U + U^(1/2) T U^(1/2), T = (I - Y)^(-1) - I,
///     Y uniform on the same box, rejection outside O < Y < I.
///   p >= 3: UnsupportedOrder.
McEstimate kober_numeric(const KoberRequest& req, const McConfig& cfg);

}  // namespace mvsf
