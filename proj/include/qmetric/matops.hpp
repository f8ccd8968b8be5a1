// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_MATOPS_HPP_
#define QMETRIC_MATOPS_HPP_

#include <Eigen/Dense>
#include <complex>

#include "qmetric/errors.hpp"

namespace qmetric {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Tolerances shared by the matrix layer. Inputs within kHermitianTol of
/// Hermitian (max-entry norm) are symmetrized as (M + M^H)/2 before use;
/// eigenvalues in [-kPsdClipTol, 0) are clipped to zero by PSD operations.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdClipTol = 1e-10;

/// Eigendecomposition of a Hermitian matrix. Column k of `eigenvectors`
/// pairs with `eigenvalues(k)`; eigenvalues are sorted descending. Ties
/// between equal eigenvalues are ordered by lexicographic comparison of the
/// eigenvector columns (real part, then imaginary part, entry by entry), so
/// the decomposition is deterministic for a fixed input.
struct EigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Max-entry norm of M - M^H.
double hermiticity_residual(const ComplexMatrix& m);

/// Throws NonHermitianError if the residual exceeds kHermitianTol, otherwise
/// returns the symmetrized matrix (M + M^H)/2.
ComplexMatrix require_hermitian(const ComplexMatrix& m, const char* where);

/// Full eigendecomposition, descending order. Throws NonHermitianError or
/// ConvergenceFailureError.
EigenSystem hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, descending order. Same preconditions as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Hermitian PSD square root: returns S with S*S = m up to
/// 1e-8 * max(1, ||m||_F). Eigenvalues in [-1e-10, 0) are clipped to zero;
/// anything lower throws NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& m);

/// Largest absolute eigenvalue of a Hermitian matrix.
double spectral_norm(const ComplexMatrix& m);

}  // namespace qmetric

#endif  // QMETRIC_MATOPS_HPP_
