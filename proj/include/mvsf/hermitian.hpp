#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mvsf {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Storage stays inline up to 4x4, which
/// covers every order the integrators work with.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  boost::container::small_vector<Complex, 16> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// Determinant by LU with partial pivoting.
Complex determinant(const ComplexMatrix& a);

/// Gauss-Jordan inverse; throws SingularMatrix when |det| < 1e-14 * scale^n.
ComplexMatrix inverse(const ComplexMatrix& a);

/// p x p complex matrix with X = X*. The diagonal is real by construction.
class HermitianMatrix {
 public:
  /// Zero matrix of order p.
  explicit HermitianMatrix(std::size_t p);

  /// Validates |m - m*| <= tol * max|m| and stores the exact Hermitian part.
  explicit HermitianMatrix(const ComplexMatrix& m, double tol = 1e-12);

  HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static HermitianMatrix identity(std::size_t p);
  static HermitianMatrix diagonal(std::span<const double> d);
  static HermitianMatrix diagonal(std::initializer_list<double> d);

  /// Inverse of coordinates(): p diagonal reals, then (re, im) of each
  /// strictly-lower entry in row-major order.
  static HermitianMatrix from_coordinates(std::size_t p, std::span<const double> coords);
  std::vector<double> coordinates() const;

  std::size_t order() const noexcept { return m_.rows(); }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  double trace() const;
  HermitianMatrix scaled(double s) const;

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
  friend HermitianMatrix congruence(const ComplexMatrix& a, const HermitianMatrix& x);
  friend HermitianMatrix inverse(const HermitianMatrix& x);

  ComplexMatrix m_;
};

/// A X A*, Hermitian by construction.
HermitianMatrix congruence(const ComplexMatrix& a, const HermitianMatrix& x);

/// Lower-triangular factor with real positive diagonal.
class LowerTriangular {
 public:
  /// Throws DomainError unless m is lower triangular with real positive diagonal.
  explicit LowerTriangular(ComplexMatrix m);

  /// Coordinates: p diagonal reals, then (re, im) of strict-lower entries.
  static LowerTriangular from_coordinates(std::size_t p, std::span<const double> coords);
  std::vector<double> coordinates() const;

  std::size_t order() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  double diag(std::size_t j) const { return m_(j, j).real(); }

  /// T T*.
  HermitianMatrix gram() const;

 private:
  ComplexMatrix m_;
};

/// Real symmetric matrix, the real-case counterpart of HermitianMatrix.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t p);
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t order() const noexcept { return p_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * p_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v);

  HermitianMatrix to_hermitian() const;

 private:
  std::size_t p_;
  std::vector<double> a_;
};

double abs_det(const HermitianMatrix& x);
double abs_det(const SymmetricMatrix& x);

bool is_positive_definite(const HermitianMatrix& x);
bool is_positive_definite(const SymmetricMatrix& x);

/// Cholesky factor, or nullopt when a pivot is <= 1e-14 * max diagonal.
std::optional<LowerTriangular> try_cholesky(const HermitianMatrix& x);

/// Throws NotPositiveDefinite.
LowerTriangular cholesky(const HermitianMatrix& x);

/// Throws SingularMatrix. The result is exactly Hermitian.
HermitianMatrix inverse(const HermitianMatrix& x);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns
};

/// Cyclic complex Jacobi rotations.
HermitianEigen eigen_hermitian(const HermitianMatrix& x);

/// V f(L) V* for the eigendecomposition X = V L V*.
template <class F>
HermitianMatrix spectral_map(const HermitianMatrix& x, F&& f) {
  const auto e = eigen_hermitian(x);
  const std::size_t p = x.order();
  ComplexMatrix scaled = e.vectors;
  for (std::size_t j = 0; j < p; ++j) {
    const double fj = f(e.values[j]);
    for (std::size_t i = 0; i < p; ++i) scaled(i, j) *= fj;
  }
  return HermitianMatrix(scaled * e.vectors.adjoint(), 1e-8);
}

/// Positive definite square root. Throws NotPositiveDefinite.
HermitianMatrix pd_sqrt(const HermitianMatrix& x);

/// Inverse of the positive definite square root. Throws NotPositiveDefinite.
HermitianMatrix pd_inv_sqrt(const HermitianMatrix& x);

/// Largest absolute eigenvalue.
double spectral_norm(const HermitianMatrix& x);

}  // namespace mvsf
