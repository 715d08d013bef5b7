#pragma once

#include <vector>

#include "miqf/matrix.hpp"

namespace miqf {

struct PosdefResult {
  bool is_posdef = false;
  /// Smallest Cholesky pivot seen; on failure, the offending pivot.
  /// +inf for the empty matrix.
  double min_pivot = 0.0;
};

/// Result of exact congruence diagonalization: p is unimodular-free invertible
/// with conj_transpose(p) * g * p diagonal; diag holds the nonzero diagonal
/// entries in pivot order, the remaining rows/columns are exactly zero.
struct Diagonalization {
  std::vector<Rational> diag;
  KMatrix p;
};

/// Exact congruence diagonalization of a Hermitian K-matrix.
Diagonalization congruence_diagonalize(const KMatrix& g);

/// Exact signature (plus, minus, zero) of a Hermitian K-matrix, computed with
/// no floating point.
Signature hermitian_signature_exact(const KMatrix& g);

/// For Hermitian g of signature (n, rows-n) with square-scalable diagonal,
/// returns exact P with conj_transpose(P) * g * P == signature_matrix(n, rows-n).
/// Passes through with the identity when g is already that matrix. Scaling is
/// restricted to exact rational square roots; otherwise NotNormalizable.
KMatrix gram_normalize(const KMatrix& g, int n);

/// Pivoted Cholesky positive-definiteness test. Pivots are chosen as the
/// largest remaining diagonal entry; verdict is "all pivots > tol".
PosdefResult posdef_check(const CMatrix& m, double tol);

/// Deterministic kernel basis via reduced row echelon form with partial
/// pivoting. Pivot candidates with magnitude <= tol are treated as zero; free
/// columns are taken in increasing index order, and basis vector j has a unit
/// in the j-th free column. Full-rank input yields a 0-column matrix.
CMatrix kernel_basis(const CMatrix& m, double tol);

int numeric_rank(const CMatrix& m, double tol);

/// Solves a * x = b by Gauss-Jordan with partial pivoting. A pivot of
/// magnitude <= tol * max(1, max_abs(a)) throws the given code.
CMatrix solve(const CMatrix& a, const CMatrix& b, double tol, ErrorCode on_singular);
CMatrix invert(const CMatrix& a, double tol, ErrorCode on_singular);

/// Exact determinant over K (fraction-based Gaussian elimination).
KElement det_exact(const KMatrix& m);
/// LU determinant.
cplx det(const CMatrix& m);
/// Exact determinant of a square rational matrix given row-major.
Rational det_rational(const std::vector<Rational>& m, int dim);

/// Gram matrix of the columns of basis under the Hermitian form g:
/// transpose(basis) * g * conj(basis). Linear in the first argument.
CMatrix restrict_hermitian(const CMatrix& g, const CMatrix& basis);
KMatrix restrict_hermitian(const KMatrix& g, const KMatrix& basis);

}  // namespace miqf
