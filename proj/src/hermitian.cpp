#include "mvsf/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mvsf/errors.hpp"

namespace mvsf {

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("ComplexMatrix: shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainError("ComplexMatrix: shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("ComplexMatrix: shape mismatch in *");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

Complex determinant(const ComplexMatrix& a) {
  if (!a.is_square()) throw DomainError("determinant: matrix is not square");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == Complex{}) return Complex{};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  if (!a.is_square()) throw DomainError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  const double scale = a.max_abs();
  if (scale == 0.0 || std::abs(determinant(a)) < 1e-14 * std::pow(scale, static_cast<double>(n)))
    throw SingularMatrix("inverse: matrix is singular");

  ComplexMatrix m = a;
  ComplexMatrix r = ComplexMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(piv, j));
        std::swap(r(k, j), r(piv, j));
      }
    const Complex d = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= d;
      r(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Complex f = m(i, k);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        r(i, j) -= f * r(k, j);
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(std::size_t p) : m_(p, p) {
  if (p == 0) throw DomainError("HermitianMatrix: order must be positive");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol) : m_(m.rows(), m.cols()) {
  if (!m.is_square() || m.rows() == 0) throw DomainError("HermitianMatrix: need a nonempty square matrix");
  const std::size_t p = m.rows();
  const double bound = tol * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i; j < p; ++j) {
      const Complex a = m(i, j);
      const Complex b = std::conj(m(j, i));
      if (std::abs(a - b) > bound) throw DomainError("HermitianMatrix: input is not Hermitian");
      const Complex v = 0.5 * (a + b);
      m_(i, j) = (i == j) ? Complex(v.real(), 0.0) : v;
      m_(j, i) = std::conj(m_(i, j));
    }
}

HermitianMatrix::HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : HermitianMatrix(ComplexMatrix(rows), 0.0) {}

HermitianMatrix HermitianMatrix::identity(std::size_t p) {
  HermitianMatrix x(p);
  for (std::size_t i = 0; i < p; ++i) x.m_(i, i) = 1.0;
  return x;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  HermitianMatrix x(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) x.m_(i, i) = d[i];
  return x;
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> d) {
  return diagonal(std::span<const double>(d.begin(), d.size()));
}

HermitianMatrix HermitianMatrix::from_coordinates(std::size_t p, std::span<const double> coords) {
  if (coords.size() != p * p) throw DomainError("HermitianMatrix: need p^2 coordinates");
  HermitianMatrix x(p);
  for (std::size_t i = 0; i < p; ++i) x.m_(i, i) = coords[i];
  std::size_t k = p;
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 0; j < i; ++j, k += 2) {
      x.m_(i, j) = Complex(coords[k], coords[k + 1]);
      x.m_(j, i) = std::conj(x.m_(i, j));
    }
  return x;
}

std::vector<double> HermitianMatrix::coordinates() const {
  const std::size_t p = order();
  std::vector<double> c;
  c.reserve(p * p);
  for (std::size_t i = 0; i < p; ++i) c.push_back(m_(i, i).real());
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      c.push_back(m_(i, j).real());
      c.push_back(m_(i, j).imag());
    }
  return c;
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order(); ++i) t += m_(i, i).real();
  return t;
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
  HermitianMatrix r = *this;
  r.m_ *= s;
  return r;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Unchecked{});
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Unchecked{});
}

HermitianMatrix congruence(const ComplexMatrix& a, const HermitianMatrix& x) {
  if (a.cols() != x.order()) throw DomainError("congruence: shape mismatch");
  ComplexMatrix y = a * x.matrix() * a.adjoint();
  const std::size_t p = y.rows();
  for (std::size_t i = 0; i < p; ++i) {
    y(i, i) = y(i, i).real();
    for (std::size_t j = 0; j < i; ++j) y(j, i) = std::conj(y(i, j));
  }
  return HermitianMatrix(std::move(y), HermitianMatrix::Unchecked{});
}

// ---------------------------------------------------------------------------
// LowerTriangular / SymmetricMatrix

LowerTriangular::LowerTriangular(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0) throw DomainError("LowerTriangular: need a nonempty square matrix");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != Complex{}) throw DomainError("LowerTriangular: nonzero entry above the diagonal");
    if (m_(i, i).imag() != 0.0 || !(m_(i, i).real() > 0.0))
      throw DomainError("LowerTriangular: diagonal must be real and positive");
  }
}

LowerTriangular LowerTriangular::from_coordinates(std::size_t p, std::span<const double> coords) {
  if (coords.size() != p * p) throw DomainError("LowerTriangular: need p^2 coordinates");
  ComplexMatrix m(p, p);
  for (std::size_t i = 0; i < p; ++i) m(i, i) = coords[i];
  std::size_t k = p;
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 0; j < i; ++j, k += 2) m(i, j) = Complex(coords[k], coords[k + 1]);
  return LowerTriangular(std::move(m));
}

std::vector<double> LowerTriangular::coordinates() const {
  const std::size_t p = order();
  std::vector<double> c;
  c.reserve(p * p);
  for (std::size_t i = 0; i < p; ++i) c.push_back(m_(i, i).real());
  for (std::size_t i = 1; i < p; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      c.push_back(m_(i, j).real());
      c.push_back(m_(i, j).imag());
    }
  return c;
}

HermitianMatrix LowerTriangular::gram() const {
  return congruence(m_, HermitianMatrix::identity(order()));
}

SymmetricMatrix::SymmetricMatrix(std::size_t p) : p_(p), a_(p * p, 0.0) {
  if (p == 0) throw DomainError("SymmetricMatrix: order must be positive");
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymmetricMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != p_) throw DomainError("SymmetricMatrix: ragged initializer");
    std::size_t j = 0;
    for (double v : r) a_[i * p_ + j++] = v;
    ++i;
  }
  for (i = 0; i < p_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a_[i * p_ + j] != a_[j * p_ + i]) throw DomainError("SymmetricMatrix: input is not symmetric");
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  a_[i * p_ + j] = v;
  a_[j * p_ + i] = v;
}

HermitianMatrix SymmetricMatrix::to_hermitian() const {
  ComplexMatrix m(p_, p_);
  for (std::size_t i = 0; i < p_; ++i)
    for (std::size_t j = 0; j < p_; ++j) m(i, j) = a_[i * p_ + j];
  return HermitianMatrix(m, 0.0);
}

// ---------------------------------------------------------------------------
// Factorizations

double abs_det(const HermitianMatrix& x) { return std::abs(determinant(x.matrix())); }
double abs_det(const SymmetricMatrix& x) { return abs_det(x.to_hermitian()); }

std::optional<LowerTriangular> try_cholesky(const HermitianMatrix& x) {
  const std::size_t p = x.order();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < p; ++i) max_diag = std::max(max_diag, x(i, i).real());
  if (!(max_diag > 0.0)) return std::nullopt;
  const double threshold = 1e-14 * max_diag;

  ComplexMatrix t(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    double pivot = x(j, j).real();
    for (std::size_t k = 0; k < j; ++k) pivot -= std::norm(t(j, k));
    if (!(pivot > threshold)) return std::nullopt;
    const double tjj = std::sqrt(pivot);
    t(j, j) = tjj;
    for (std::size_t i = j + 1; i < p; ++i) {
      Complex s = x(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= t(i, k) * std::conj(t(j, k));
      t(i, j) = s / tjj;
    }
  }
  return LowerTriangular(std::move(t));
}

LowerTriangular cholesky(const HermitianMatrix& x) {
  auto t = try_cholesky(x);
  if (!t) throw NotPositiveDefinite("cholesky: matrix is not positive definite");
  return std::move(*t);
}

bool is_positive_definite(const HermitianMatrix& x) { return try_cholesky(x).has_value(); }
bool is_positive_definite(const SymmetricMatrix& x) { return is_positive_definite(x.to_hermitian()); }

HermitianMatrix inverse(const HermitianMatrix& x) {
  ComplexMatrix y = inverse(x.matrix());
  return HermitianMatrix(y, 1e-6);
}

HermitianEigen eigen_hermitian(const HermitianMatrix& x) {
  const std::size_t p = x.order();
  ComplexMatrix a = x.matrix();
  ComplexMatrix v = ComplexMatrix::identity(p);
  const double norm = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < i; ++j) off += std::norm(a(i, j));
    if (std::sqrt(off) <= 1e-16 * norm) break;

    for (std::size_t r = 0; r + 1 < p; ++r)
      for (std::size_t q = r + 1; q < p; ++q) {
        const double mag = std::abs(a(r, q));
        if (mag <= 1e-300) continue;
        // Phase D makes the (r, q) entry real; the real rotation then zeroes it.
        const Complex phase = std::conj(a(r, q)) / mag;
        const double theta = (a(q, q).real() - a(r, r).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // G = D * P restricted to columns r, q.
        const Complex g_rr = c, g_rq = s;
        const Complex g_qr = -s * phase, g_qq = c * phase;

        for (std::size_t i = 0; i < p; ++i) {  // A <- A G
          const Complex air = a(i, r), aiq = a(i, q);
          a(i, r) = air * g_rr + aiq * g_qr;
          a(i, q) = air * g_rq + aiq * g_qq;
        }
        for (std::size_t j = 0; j < p; ++j) {  // A <- G* A
          const Complex arj = a(r, j), aqj = a(q, j);
          a(r, j) = std::conj(g_rr) * arj + std::conj(g_qr) * aqj;
          a(q, j) = std::conj(g_rq) * arj + std::conj(g_qq) * aqj;
        }
        a(r, q) = a(q, r) = 0.0;
        a(r, r) = a(r, r).real();
        a(q, q) = a(q, q).real();
        for (std::size_t i = 0; i < p; ++i) {  // V <- V G
          const Complex vir = v(i, r), viq = v(i, q);
          v(i, r) = vir * g_rr + viq * g_qr;
          v(i, q) = vir * g_rq + viq * g_qq;
        }
      }
  }

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen e{std::vector<double>(p), ComplexMatrix(p, p)};
  for (std::size_t k = 0; k < p; ++k) {
    e.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < p; ++i) e.vectors(i, k) = v(i, order[k]);
  }
  return e;
}

HermitianMatrix pd_sqrt(const HermitianMatrix& x) {
  if (!is_positive_definite(x)) throw NotPositiveDefinite("pd_sqrt: matrix is not positive definite");
  return spectral_map(x, [](double l) { return std::sqrt(std::max(l, 0.0)); });
}

HermitianMatrix pd_inv_sqrt(const HermitianMatrix& x) {
  if (!is_positive_definite(x)) throw NotPositiveDefinite("pd_inv_sqrt: matrix is not positive definite");
  return spectral_map(x, [](double l) { return 1.0 / std::sqrt(l); });
}

double spectral_norm(const HermitianMatrix& x) {
  const auto e = eigen_hermitian(x);
  return std::max(std::abs(e.values.front()), std::abs(e.values.back()));
}

}  // namespace mvsf
