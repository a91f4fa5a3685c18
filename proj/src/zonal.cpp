#include "mvsf/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "mvsf/errors.hpp"

namespace mvsf {
namespace {

void enumerate(int remaining, int cap, int slots, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    // The rest must fit into slots - 1 parts no larger than `part`.
    if (static_cast<long>(part) * slots < remaining) break;
    prefix.push_back(part);
    enumerate(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

// h_0..h_n of the given variables, via Newton's identities on power sums.
std::vector<double> complete_homogeneous(const std::vector<double>& vars, int n) {
  std::vector<double> power(n + 1, 0.0);
  for (double v : vars) {
    double t = 1.0;
    for (int i = 1; i <= n; ++i) {
      t *= v;
      power[i] += t;
    }
  }
  std::vector<double> h(n + 1, 0.0);
  h[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double s = 0.0;
    for (int i = 1; i <= k; ++i) s += power[i] * h[k - i];
    h[k] = s / k;
  }
  return h;
}

// det(m) for a small dense row-major matrix; m is overwritten.
double small_det(std::vector<double>& m, std::size_t n) {
  double det = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    if (m[piv * n + c] == 0.0) return 0.0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[c * n + j], m[piv * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m[r * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

double jacobi_trudi(const Partition& k, const std::vector<double>& h) {
  const std::size_t n = k.length();
  if (n == 0) return 1.0;
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long idx = static_cast<long>(k[i]) - static_cast<long>(i) + static_cast<long>(j);
      m[i * n + j] = idx < 0 ? 0.0 : h[static_cast<std::size_t>(idx)];
    }
  return small_det(m, n);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("Partition: parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

std::vector<Partition> partitions_of(int k, int max_parts) {
  if (k < 0) throw DomainError("partitions_of: k must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  if (k == 0) return {Partition{}};
  enumerate(k, k, std::max(max_parts, 0), prefix, out);
  return out;
}

double hook_product(const Partition& k) {
  double prod = 1.0;
  for (std::size_t i = 0; i < k.length(); ++i)
    for (int j = 0; j < k[i]; ++j) {
      std::size_t leg = 0;
      for (std::size_t r = i + 1; r < k.length() && k[r] > j; ++r) ++leg;
      prod *= static_cast<double>(k[i] - j + static_cast<int>(leg));
    }
  return prod;
}

double standard_tableaux(const Partition& k) {
  return std::exp(std::lgamma(k.weight() + 1.0) - std::log(hook_product(k)));
}

double gen_pochhammer(double a, const Partition& k) {
  double prod = 1.0;
  for (std::size_t i = 0; i < k.length(); ++i) {
    const double base = a - static_cast<double>(i);
    for (int m = 0; m < k[i]; ++m) prod *= base + m;
  }
  return prod;
}

double schur(const Partition& k, const HermitianMatrix& x) {
  if (k.length() > x.order()) return 0.0;
  const auto h = complete_homogeneous(eigen_hermitian(x).values, k.weight());
  return jacobi_trudi(k, h);
}

double zonal_c(const Partition& k, const HermitianMatrix& x) {
  if (k.length() > x.order()) return 0.0;
  // Integer-valued for small k; round the factorial ratio to kill lgamma noise.
  const double f = std::round(standard_tableaux(k));
  return f * schur(k, x);
}

HypSeries::HypSeries(HypSeriesSpec spec, std::size_t p) : spec_(std::move(spec)), p_(p) {
  const std::size_t r = spec_.a.size(), s = spec_.b.size();
  if (spec_.k_max < 10) throw DomainError("HypSeriesSpec: k_max must be >= 10");
  if (r > s + 1)
    throw DomainError("HypSeriesSpec: need s >= r or r = s + 1 (r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  if (p == 0) throw DomainError("HypSeries: order must be positive");

  layers_.resize(static_cast<std::size_t>(spec_.k_max) + 1);
  for (int k = 0; k <= spec_.k_max; ++k) {
    for (auto& part : partitions_of(k, static_cast<int>(p))) {
      // Cell by cell, [a]_K / [b]_K / hooks stays within range at large k.
      double coef = 1.0;
      for (std::size_t i = 0; i < part.length(); ++i)
        for (int j = 0; j < part[i]; ++j) {
          const double content = static_cast<double>(j) - static_cast<double>(i);
          int leg = 0;
          for (std::size_t r = i + 1; r < part.length() && part[r] > j; ++r) ++leg;
          double factor = 1.0 / static_cast<double>(part[i] - j + leg);
          for (double a : spec_.a) factor *= a + content;
          for (double b : spec_.b) {
            if (b + content == 0.0)
              throw DomainError("HypSeriesSpec: [b]_K vanishes for b=" + std::to_string(b) + " at degree " +
                                std::to_string(k));
            factor /= b + content;
          }
          coef *= factor;
        }
      layers_[static_cast<std::size_t>(k)].push_back({std::move(part), coef});
    }
  }
}

SeriesValue HypSeries::operator()(const HermitianMatrix& x) const {
  if (x.order() != p_) throw DomainError("HypSeries: matrix order does not match the series");
  return evaluate(eigen_hermitian(x).values);
}

SeriesValue HypSeries::evaluate(const std::vector<double>& eig) const {
  const bool bounded = spec_.a.size() == spec_.b.size() + 1;
  double norm = 0.0;
  for (double v : eig) norm = std::max(norm, std::abs(v));
  if (bounded && norm >= 1.0)
    throw NormTooLarge("hyp_pfq: spectral norm " + std::to_string(norm) + " >= 1 with r = s + 1");

  const auto h = complete_homogeneous(eig, spec_.k_max);
  // Schur polynomials have nonnegative monomial coefficients, so
  // |s_K(eig)| <= s_K(|eig|). The layer masses at |eig| majorize the series
  // and decay monotonically even when X is indefinite and the signed layers
  // cancel at alternate degrees.
  std::vector<double> abs_eig(eig.size());
  for (std::size_t i = 0; i < eig.size(); ++i) abs_eig[i] = std::abs(eig[i]);
  const auto h_abs = complete_homogeneous(abs_eig, spec_.k_max);
  std::vector<double> mass(layers_.size(), 0.0);
  double total = 0.0, abs_total = 0.0;
  for (std::size_t k = 0; k < layers_.size(); ++k) {
    for (const auto& term : layers_[k]) {
      if (term.coef == 0.0) continue;
      const double t = term.coef * jacobi_trudi(term.k, h);
      total += t;
      abs_total += std::abs(t);
      mass[k] += std::abs(term.coef) * std::abs(jacobi_trudi(term.k, h_abs));
    }
  }

  const std::size_t n = mass.size();
  const double l0 = mass[n - 3], l1 = mass[n - 2], l2 = mass[n - 1];
  if (l1 > l0 || l2 > l1)
    throw NonconvergentTail("hyp_pfq: degree layers are not decreasing at k_max=" + std::to_string(spec_.k_max));

  double tail = 0.0;
  if (l2 > 0.0) {
    double rho = std::max(l1 > 0.0 ? l2 / l1 : 0.0, l0 > 0.0 ? l1 / l0 : 0.0);
    if (bounded) rho = std::max(rho, norm);
    if (rho >= 1.0) throw NonconvergentTail("hyp_pfq: layer ratio does not fall below 1");
    tail = l2 * rho / (1.0 - rho);
  }
  tail += 256.0 * std::numeric_limits<double>::epsilon() * abs_total;
  return {total, tail};
}

SeriesValue hyp_pfq(const HypSeriesSpec& spec, const HermitianMatrix& x) {
  return HypSeries(spec, x.order())(x);
}

}  // namespace mvsf
