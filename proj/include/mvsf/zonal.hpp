#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mvsf/hermitian.hpp"

namespace mvsf {

/// Weakly decreasing tuple of positive integers. Trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError if the parts increase or any part is negative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Partitions of k with at most max_parts parts, reverse-lexicographic:
/// (4), (3,1), (2,2), (2,1,1), ...
std::vector<Partition> partitions_of(int k, int max_parts);

/// Product of the hook lengths of the Young diagram.
double hook_product(const Partition& k);

/// Number of standard Young tableaux, k! / hook_product.
double standard_tableaux(const Partition& k);

/// [a]_K = prod_i (a - i + 1)_{k_i}, i = 1..length.
double gen_pochhammer(double a, const Partition& k);

/// Schur polynomial s_K at the eigenvalues of X, by Jacobi-Trudi in the
/// complete homogeneous polynomials h_j (from power sums via Newton).
double schur(const Partition& k, const HermitianMatrix& x);

/// Complex zonal polynomial C~_K(X) = standard_tableaux(K) * s_K(X).
/// Zero when K has more parts than X has rows.
double zonal_c(const Partition& k, const HermitianMatrix& x);

struct HypSeriesSpec {
  std::vector<double> a;  // numerator parameters a_1..a_r
  std::vector<double> b;  // denominator parameters b_1..b_s
  int k_max = 25;
};

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Truncated pFq of Hermitian matrix argument,
///   sum_{k <= k_max} sum_{K |- k} prod[a_i]_K / prod[b_j]_K * C~_K(X) / k!.
/// Coefficients for a fixed order p are computed once, so repeated
/// evaluation (e.g. inside a Monte Carlo loop) only pays for the Schur
/// polynomials.
class HypSeries {
 public:
  /// Throws DomainError if k_max < 10, r > s + 1, or some [b_j]_K
  /// vanishes for |K| <= k_max.
  HypSeries(HypSeriesSpec spec, std::size_t p);

  /// Throws NormTooLarge when r = s + 1 and the spectral norm of X is >= 1,
  /// NonconvergentTail when the majorant masses of the last three degree
  /// layers do not decrease. The mass of degree k is the sum over K |- k of
  /// |coef_K| C~_K evaluated at the absolute eigenvalues of X, which bounds
  /// the absolute value of every degree-k term sum.
  ///
  /// tail_bound = M rho / (1 - rho) for the mass M of the last layer, where
  /// rho is the larger of the last two mass ratios (and of the spectral norm
  /// when r = s + 1), plus 256 eps times the sum of absolute terms.
  SeriesValue operator()(const HermitianMatrix& x) const;

  /// Same, from the eigenvalues of X.
  SeriesValue evaluate(const std::vector<double>& eigenvalues) const;

  std::size_t order() const noexcept { return p_; }

 private:
  struct Term {
    Partition k;
    double coef;  // prod[a]_K / prod[b]_K / hook_product(K)
  };
  HypSeriesSpec spec_;
  std::size_t p_;
  std::vector<std::vector<Term>> layers_;  // layers_[k] for degree k
};

/// One-shot evaluation; see HypSeries.
SeriesValue hyp_pfq(const HypSeriesSpec& spec, const HermitianMatrix& x);

}  // namespace mvsf
