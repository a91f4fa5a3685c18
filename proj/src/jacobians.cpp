#include "mvsf/jacobians.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "mvsf/errors.hpp"

namespace mvsf {
namespace {

void check_step(double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) throw DomainError("verify_jacobian_fd: step h must lie in [1e-7, 1e-3]");
}

// Determinant of a dense n x n real matrix (row-major) by partial pivoting.
double real_determinant(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i * n + k]) > std::abs(a[piv * n + k])) piv = i;
    const double d = a[piv * n + k];
    if (d == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = -det;
    }
    det *= d;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return det;
}

FdCheck compare(double analytic, double numeric) {
  return {analytic, numeric, std::abs(analytic - numeric) / std::abs(analytic)};
}

}  // namespace

RealCoordinates rectangular_coordinates(const ComplexMatrix& x) {
  RealCoordinates c;
  c.reserve(2 * x.rows() * x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) c.push_back(x(i, j).real());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) c.push_back(x(i, j).imag());
  return c;
}

ComplexMatrix from_rectangular_coordinates(std::size_t m, std::size_t n, std::span<const double> c) {
  if (c.size() != 2 * m * n) throw DomainError("from_rectangular_coordinates: need 2mn coordinates");
  ComplexMatrix x(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = Complex(c[i * n + j], c[m * n + i * n + j]);
  return x;
}

LinearResult apply_linear(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                          const ComplexMatrix& x) {
  const std::size_t m = x.rows(), n = x.cols();
  if (a.rows() != m || a.cols() != m || b.rows() != n || b.cols() != n || c.rows() != m || c.cols() != n)
    throw DomainError("apply_linear: shape mismatch");
  const double det_a = std::abs(determinant(a));
  const double det_b = std::abs(determinant(b));
  if (det_a == 0.0 || det_b == 0.0) throw SingularTransform("apply_linear: A and B must be nonsingular");
  // |det(A A*)| = |det A|^2.
  const double jac = std::pow(det_a * det_a, static_cast<double>(n)) * std::pow(det_b * det_b, static_cast<double>(m));
  return {a * x * b + c, jac};
}

HermitianResult apply_congruence(const ComplexMatrix& a, const HermitianMatrix& x) {
  const std::size_t p = x.order();
  if (a.rows() != p || a.cols() != p) throw DomainError("apply_congruence: shape mismatch");
  const double det_a = std::abs(determinant(a));
  if (det_a == 0.0) throw SingularTransform("apply_congruence: A must be nonsingular");
  return {congruence(a, x), std::pow(det_a, 2.0 * p)};
}

double cholesky_jacobian(const LowerTriangular& t) {
  const std::size_t p = t.order();
  double jac = std::pow(2.0, static_cast<double>(p));
  for (std::size_t j = 0; j < p; ++j) jac *= std::pow(t.diag(j), 2.0 * (p - 1 - j) + 1.0);
  return jac;
}

double inverse_jacobian(const HermitianMatrix& x) {
  const double d = abs_det(x);
  const double scale = x.matrix().max_abs();
  if (scale == 0.0 || d < 1e-14 * std::pow(scale, static_cast<double>(x.order())))
    throw SingularMatrix("inverse_jacobian: matrix is singular");
  return std::pow(d, -2.0 * x.order());
}

double general_inverse_jacobian(const ComplexMatrix& x) {
  const double d = std::abs(determinant(x));
  if (d == 0.0) throw SingularMatrix("general_inverse_jacobian: matrix is singular");
  return std::pow(d * d, -2.0 * x.rows());
}

double fd_jacobian_determinant(const std::function<RealCoordinates(std::span<const double>)>& map,
                               std::span<const double> at, double h) {
  const std::size_t n = at.size();
  std::vector<double> jac(n * n);
  std::vector<double> probe(at.begin(), at.end());
  for (std::size_t k = 0; k < n; ++k) {
    probe[k] = at[k] + h;
    const RealCoordinates up = map(probe);
    probe[k] = at[k] - h;
    const RealCoordinates down = map(probe);
    probe[k] = at[k];
    if (up.size() != n || down.size() != n)
      throw DomainError("fd_jacobian_determinant: map must preserve the coordinate count");
    for (std::size_t i = 0; i < n; ++i) jac[i * n + k] = (up[i] - down[i]) / (2.0 * h);
  }
  const double det = std::abs(real_determinant(std::move(jac), n));
  if (!std::isfinite(det) || det < std::numeric_limits<double>::min())
    throw DegenerateJacobian("fd_jacobian_determinant: numeric determinant underflowed");
  return det;
}

FdCheck verify_jacobian_fd(const LinearSandwich& t, const ComplexMatrix& x, double h) {
  check_step(h);
  const std::size_t m = x.rows(), n = x.cols();
  const double analytic = apply_linear(t.a, t.b, t.c, x).jacobian;
  const auto map = [&](std::span<const double> c) {
    return rectangular_coordinates(apply_linear(t.a, t.b, t.c, from_rectangular_coordinates(m, n, c)).y);
  };
  return compare(analytic, fd_jacobian_determinant(map, rectangular_coordinates(x), h));
}

FdCheck verify_jacobian_fd(const HermitianCongruence& t, const HermitianMatrix& x, double h) {
  check_step(h);
  const std::size_t p = x.order();
  const double analytic = apply_congruence(t.a, x).jacobian;
  const auto map = [&](std::span<const double> c) {
    return congruence(t.a, HermitianMatrix::from_coordinates(p, c)).coordinates();
  };
  return compare(analytic, fd_jacobian_determinant(map, x.coordinates(), h));
}

FdCheck verify_jacobian_fd(const CholeskyFactor&, const LowerTriangular& x, double h) {
  check_step(h);
  const std::size_t p = x.order();
  for (std::size_t j = 0; j < p; ++j)
    if (x.diag(j) <= h) throw DomainError("verify_jacobian_fd: base point too close to the t_jj = 0 boundary");
  const double analytic = cholesky_jacobian(x);
  const auto map = [&](std::span<const double> c) {
    return LowerTriangular::from_coordinates(p, c).gram().coordinates();
  };
  return compare(analytic, fd_jacobian_determinant(map, x.coordinates(), h));
}

FdCheck verify_jacobian_fd(const HermitianInverse&, const HermitianMatrix& x, double h) {
  check_step(h);
  const std::size_t p = x.order();
  const double analytic = inverse_jacobian(x);
  const auto map = [&](std::span<const double> c) {
    return inverse(HermitianMatrix::from_coordinates(p, c)).coordinates();
  };
  return compare(analytic, fd_jacobian_determinant(map, x.coordinates(), h));
}

}  // namespace mvsf
