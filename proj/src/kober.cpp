#include "mvsf/kober.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>
#include <type_traits>

#include "mvsf/errors.hpp"
#include "mvsf/integrate.hpp"
#include "mvsf/multigamma.hpp"

namespace mvsf {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

int order_of(const KoberRequest& req) { return static_cast<int>(req.u.order()); }

void check_anchor(const KoberRequest& req, bool below_identity) {
  const int p = order_of(req);
  if (!std::isfinite(req.alpha) || !(req.alpha > p - 1))
    throw DomainError("kober: need alpha > p - 1 (alpha=" + std::to_string(req.alpha) + ")");
  if (!std::isfinite(req.beta)) throw DomainError("kober: beta must be finite");
  const auto eig = eigen_hermitian(req.u).values;
  if (!(eig.front() > 0.0)) throw DomainError("kober: U must be positive definite");
  if (eig.back() / eig.front() >= 1e6) throw DomainError("kober: U is too ill-conditioned (condition number >= 1e6)");
  if (below_identity && !(eig.back() < 1.0)) throw DomainError("kober: need O < U < I");
}

template <class T>
const T& expect(const KoberRequest& req, KoberKind kind, const char* what) {
  if (req.kind != kind) throw DomainError(std::string(what) + ": wrong operator kind");
  const T* f = std::get_if<T>(&req.f);
  if (f == nullptr) throw DomainError(std::string(what) + ": integrand does not match this closed form");
  return *f;
}

SeriesValue gauss_2f1(double a, double b, double c, const HermitianMatrix& u, int k_max) {
  return hyp_pfq({{a, b}, {c}, k_max}, u);
}

SeriesValue scaled(SeriesValue s, double factor) {
  return {s.value * factor, s.tail_bound * std::abs(factor)};
}

using Integrand = std::function<double(const HermitianMatrix&)>;

Integrand compile(const IntegrandDescriptor& desc, std::size_t p) {
  return std::visit(
      overloaded{
          [](const DetPower& f) -> Integrand {
            return [g = f.gamma](const HermitianMatrix& v) { return std::pow(abs_det(v), g); };
          },
          [](const DetPowerNeg& f) -> Integrand {
            return [g = f.gamma](const HermitianMatrix& v) { return std::pow(abs_det(v), -g); };
          },
          [p](const DetOneMinusPower& f) -> Integrand {
            return [g = f.gamma, id = HermitianMatrix::identity(p)](const HermitianMatrix& v) {
              return std::pow(abs_det(id - v), -g);
            };
          },
          [p](const DetPowerTimesOneMinus& f) -> Integrand {
            return [g = f.gamma, d = f.delta, id = HermitianMatrix::identity(p)](const HermitianMatrix& v) {
              return std::pow(abs_det(v), g) * std::pow(abs_det(id - v), -d);
            };
          },
          [p](const HypIntegrand& f) -> Integrand {
            return [series = HypSeries(f.series, p)](const HermitianMatrix& v) { return series(v).value; };
          },
          [](const CustomIntegrand& f) -> Integrand {
            if (!f.f) throw DomainError("kober: empty custom integrand");
            return f.f;
          },
      },
      desc);
}

McEstimate numeric_scalar(const KoberRequest& req) {
  const double alpha = req.alpha, beta = req.beta;
  const double u = req.u(0, 0).real();
  const Integrand f = compile(req.f, 1);
  const auto at = [&f](double v) { return f(HermitianMatrix::diagonal({v})); };
  const double norm = 1.0 / std::tgamma(alpha);

  boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  double value = 0.0;
  // The two-argument form receives xc = b - x near the upper end (and
  // a - x <= 0 near the lower end), so 1 - x stays exact as x -> 1.
  const auto one_minus = [](double x, double xc) { return xc > 0.0 ? xc : 1.0 - x; };
  if (req.kind == KoberKind::second) {
    // v = u + w, w = y / (1 - y).
    const auto g = [&](double y, double yc) {
      const double s = one_minus(y, yc);
      const double w = y / s;
      const double v = u + w;
      const double fv = at(v);
      if (fv == 0.0) return 0.0;
      return std::exp((-beta - alpha) * std::log(v) + (alpha - 1.0) * std::log(w) - 2.0 * std::log(s)) * fv;
    };
    value = integrator.integrate(g, 0.0, 1.0, 1e-12, &error, &l1, &levels);
    value *= std::pow(u, beta) * norm;
    error *= std::pow(u, beta) * norm;
  } else {
    // v = u t.
    const auto g = [&](double t, double tc) {
      return std::exp(beta * std::log(t) + (alpha - 1.0) * std::log(one_minus(t, tc))) * at(u * t);
    };
    value = integrator.integrate(g, 0.0, 1.0, 1e-12, &error, &l1, &levels);
    // u^(-alpha-beta) * u^beta * u^(alpha-1) * u (from dv) = 1.
    value *= norm;
    error *= norm;
  }
  if (!std::isfinite(value) || error > 1e-9)
    throw NonconvergedQuadrature("kober_numeric: tanh-sinh error estimate " + std::to_string(error) + " exceeds 1e-9");
  return {value, 0.0, 0};
}

McEstimate numeric_p2(const KoberRequest& req, const McConfig& cfg) {
  constexpr std::size_t p = 2;
  const double alpha = req.alpha, beta = req.beta;
  const Integrand f = compile(req.f, p);
  const HermitianMatrix root = pd_sqrt(req.u);
  const double det_u = abs_det(req.u);
  const double volume = unit_box_volume(p);
  const double gamma_alpha = complex_multigamma({alpha, static_cast<int>(p)});
  const HermitianMatrix id = HermitianMatrix::identity(p);
  const double pd = static_cast<double>(p);

  BatchFn batch;
  if (req.kind == KoberKind::first) {
    // dV = |det U|^p dW.
    const double scale = std::pow(det_u, -alpha - beta + pd) / gamma_alpha * volume;
    batch = [&, scale](Rng& rng, std::uint64_t count) {
      BatchResult r;
      for (std::uint64_t k = 0; k < count; ++k) {
        const HermitianMatrix w = draw_unit_box(rng, p);
        if (!in_unit_interval(w)) continue;
        ++r.accepted;
        const HermitianMatrix v = congruence(root.matrix(), w);
        r.sum += scale * std::pow(abs_det(v), beta) * std::pow(abs_det(req.u - v), alpha - pd) * f(v);
      }
      return r;
    };
  } else {
    // dV = |det U|^p dT and dT = |det(I - Y)|^(-2p) dY.
    const double scale = std::pow(det_u, beta + pd) / gamma_alpha * volume;
    batch = [&, scale](Rng& rng, std::uint64_t count) {
      BatchResult r;
      for (std::uint64_t k = 0; k < count; ++k) {
        const HermitianMatrix y = draw_unit_box(rng, p);
        if (!in_unit_interval(y)) continue;
        ++r.accepted;
        const HermitianMatrix c = id - y;
        const HermitianMatrix t = inverse(c) - id;
        const HermitianMatrix v = req.u + congruence(root.matrix(), t);
        const double jac = std::pow(abs_det(c), -2.0 * pd);
        r.sum += scale * jac * std::pow(abs_det(v), -beta - alpha) * std::pow(abs_det(v - req.u), alpha - pd) * f(v);
      }
      return r;
    };
  }
  const auto run = run_monte_carlo(cfg, batch);
  require_acceptance(run.accepted, cfg.samples, "kober_numeric");
  return run.estimate;
}

}  // namespace

double evaluate(const IntegrandDescriptor& f, const HermitianMatrix& v) { return compile(f, v.order())(v); }

double kober2_detpower_closed(const KoberRequest& req) {
  const auto& f = expect<DetPowerNeg>(req, KoberKind::second, "kober2_detpower_closed");
  check_anchor(req, false);
  const int p = order_of(req);
  if (!(req.beta + f.gamma > p - 1)) throw DomainError("kober2_detpower_closed: need beta + gamma > p - 1");
  return std::pow(abs_det(req.u), -f.gamma) *
         complex_multigamma_ratio(p, req.beta + f.gamma, req.alpha + req.beta + f.gamma);
}

double kober1_case1_closed(const KoberRequest& req) {
  const auto& f = expect<DetPower>(req, KoberKind::first, "kober1_case1_closed");
  check_anchor(req, false);
  const int p = order_of(req);
  if (!(req.beta + f.gamma > -1.0)) throw DomainError("kober1_case1_closed: need beta + gamma > -1");
  return std::pow(abs_det(req.u), f.gamma) *
         complex_multigamma_ratio(p, req.beta + f.gamma + p, req.alpha + req.beta + f.gamma + p);
}

SeriesValue kober1_case2_closed(const KoberRequest& req) {
  const auto& f = expect<DetOneMinusPower>(req, KoberKind::first, "kober1_case2_closed");
  check_anchor(req, true);
  const int p = order_of(req);
  if (!(req.beta > -1.0)) throw DomainError("kober1_case2_closed: need beta > -1");
  const double pre = complex_multigamma_ratio(p, req.beta + p, req.alpha + req.beta + p);
  return scaled(gauss_2f1(req.beta + p, f.gamma, req.alpha + req.beta + p, req.u, req.k_max), pre);
}

SeriesValue kober1_case3_closed(const KoberRequest& req) {
  const auto& f = expect<DetPowerTimesOneMinus>(req, KoberKind::first, "kober1_case3_closed");
  check_anchor(req, true);
  const int p = order_of(req);
  if (!(req.beta + f.gamma > -1.0)) throw DomainError("kober1_case3_closed: need beta + gamma > -1");
  const double shift = req.beta + f.gamma + p;
  const double pre = std::pow(abs_det(req.u), f.gamma) * complex_multigamma_ratio(p, shift, req.alpha + shift);
  return scaled(gauss_2f1(shift, f.delta, req.alpha + shift, req.u, req.k_max), pre);
}

SeriesValue kober1_case4_closed(const KoberRequest& req) {
  const auto& f = expect<HypIntegrand>(req, KoberKind::first, "kober1_case4_closed");
  check_anchor(req, false);
  const int p = order_of(req);
  if (!(req.beta > -1.0)) throw DomainError("kober1_case4_closed: need beta > -1");
  if (f.series.a.size() > f.series.b.size() + 1) throw DomainError("kober1_case4_closed: need s >= r or r = s + 1");
  HypSeriesSpec lifted = f.series;
  lifted.a.push_back(req.beta + p);
  lifted.b.push_back(req.alpha + req.beta + p);
  const double pre = complex_multigamma_ratio(p, req.beta + p, req.alpha + req.beta + p);
  return scaled(hyp_pfq(lifted, req.u), pre);
}

SeriesValue kober_closed(const KoberRequest& req) {
  if (req.kind == KoberKind::second) return {kober2_detpower_closed(req), 0.0};
  return std::visit(
      overloaded{
          [&](const DetPower&) { return SeriesValue{kober1_case1_closed(req), 0.0}; },
          [&](const DetOneMinusPower&) { return kober1_case2_closed(req); },
          [&](const DetPowerTimesOneMinus&) { return kober1_case3_closed(req); },
          [&](const HypIntegrand&) { return kober1_case4_closed(req); },
          [](const auto&) -> SeriesValue {
            throw DomainError("kober_closed: no closed form for this integrand and kind");
          },
      },
      req.f);
}

McEstimate kober_numeric(const KoberRequest& req, const McConfig& cfg) {
  const int p = order_of(req);
  if (p >= 3) throw UnsupportedOrder("kober_numeric: only p = 1 and p = 2 are supported");
  if (!std::isfinite(req.alpha) || !(req.alpha > p - 1)) throw DomainError("kober_numeric: need alpha > p - 1");
  if (!is_positive_definite(req.u)) throw DomainError("kober_numeric: U must be positive definite");
  if (p == 1) return numeric_scalar(req);
  validate(cfg);
  return numeric_p2(req, cfg);
}

}  // namespace mvsf
