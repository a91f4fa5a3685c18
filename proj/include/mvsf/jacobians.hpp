#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "mvsf/hermitian.hpp"

namespace mvsf {

/// Real coordinates of a matrix under the wedge-product measure:
/// an m x n complex matrix has 2mn (all real parts, then all imaginary
/// parts); a p x p Hermitian or lower-triangular matrix has p^2 (diagonal
/// reals, then (re, im) of each strictly-lower entry).
using RealCoordinates = std::vector<double>;

RealCoordinates rectangular_coordinates(const ComplexMatrix& x);
ComplexMatrix from_rectangular_coordinates(std::size_t m, std::size_t n, std::span<const double> c);

/// Y = A X B + C with A (m x m) and B (n x n) nonsingular.
struct LinearSandwich {
  ComplexMatrix a, b, c;
};

/// Y = A X A* on Hermitian X, A nonsingular.
struct HermitianCongruence {
  ComplexMatrix a;
};

/// X = T T* from the lower-triangular factor T.
struct CholeskyFactor {};

/// Y = X^{-1} on nonsingular Hermitian X.
struct HermitianInverse {};

using MatrixTransform = std::variant<LinearSandwich, HermitianCongruence, CholeskyFactor, HermitianInverse>;

struct LinearResult {
  ComplexMatrix y;
  double jacobian;
};

struct HermitianResult {
  HermitianMatrix y;
  double jacobian;
};

/// jacobian = |det(A A*)|^n |det(B B*)|^m. Throws SingularTransform.
LinearResult apply_linear(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                          const ComplexMatrix& x);

/// jacobian = |det A|^(2p). Throws SingularTransform.
HermitianResult apply_congruence(const ComplexMatrix& a, const HermitianMatrix& x);

/// 2^p prod_j t_jj^(2(p-j)+1), j = 1..p.
double cholesky_jacobian(const LowerTriangular& t);

/// |det(X X*)|^(-p) = |det X|^(-2p). Throws SingularMatrix.
double inverse_jacobian(const HermitianMatrix& x);

/// |det(X X*)|^(-2p) for a general nonsingular X with independent complex
/// entries. Formula only; no finite-difference check exists for it.
double general_inverse_jacobian(const ComplexMatrix& x);

struct FdCheck {
  double analytic;
  double numeric;
  double rel_err;
};

/// |det d(map)/d(coords)| by central differences. Throws DegenerateJacobian
/// when the determinant underflows or is not finite.
double fd_jacobian_determinant(const std::function<RealCoordinates(std::span<const double>)>& map,
                               std::span<const double> at, double h);

/// Finite-difference check of each transform's closed-form Jacobian at a
/// base point. h must lie in [1e-7, 1e-3].
FdCheck verify_jacobian_fd(const LinearSandwich& t, const ComplexMatrix& x, double h = 1e-5);
FdCheck verify_jacobian_fd(const HermitianCongruence& t, const HermitianMatrix& x, double h = 1e-5);
FdCheck verify_jacobian_fd(const CholeskyFactor& t, const LowerTriangular& x, double h = 1e-5);
FdCheck verify_jacobian_fd(const HermitianInverse& t, const HermitianMatrix& x, double h = 1e-5);

}  // namespace mvsf
