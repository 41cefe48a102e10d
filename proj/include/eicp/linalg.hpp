#pragma once

#include <optional>

#include "eicp/matrix.hpp"

namespace eicp {

/// Eigenvalues in ascending order; column k of `vectors` pairs with values[k].
/// For sym_eig the columns are orthonormal; for generalized_eig they are
/// B-orthonormal (x_i^T B x_j = delta_ij).
struct EigenDecomposition {
  Vector values;
  DenseMatrix vectors;

  Vector vector(std::size_t k) const { return vectors.column(k); }
};

/// Lower-triangular L with M = L L^T. Throws NotPositiveDefinite when a pivot
/// falls at or below 1e-12 * (1 + max diagonal of M).
DenseMatrix cholesky(const SymMatrix& m);

/// Cyclic Jacobi eigensolver. Throws NonConvergence after max_sweeps.
EigenDecomposition sym_eig(const SymMatrix& m, int max_sweeps = 100);

/// Eigenpairs of A x = mu B x for B positive definite, via the congruence
/// C = L^-1 A L^-T with B = L L^T and x = L^-T y.
EigenDecomposition generalized_eig(const SymMatrix& a, const SymMatrix& b);

/// Solves L y = rhs for lower-triangular L.
Vector forward_substitute(const DenseMatrix& lower, std::span<const double> rhs);

/// Solves L^T x = rhs for lower-triangular L.
Vector back_substitute_transposed(const DenseMatrix& lower, std::span<const double> rhs);

/// Gaussian elimination with partial pivoting. Returns nullopt when a pivot
/// drops below rel_tol times the largest entry of the system matrix.
std::optional<Vector> solve_linear(DenseMatrix m, Vector rhs, double rel_tol = 1e-12);

}  // namespace eicp
