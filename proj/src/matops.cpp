// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/matops.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace qmetric {

double hermiticity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw BadShapeError("hermiticity_residual: matrix is not square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix require_hermitian(const ComplexMatrix& m, const char* where) {
  const double res = hermiticity_residual(m);
  if (res > kHermitianTol) {
    throw NonHermitianError(std::string(where) +
                                ": input exceeds Hermiticity tolerance",
                            res);
  }
  return 0.5 * (m + m.adjoint());
}

namespace {

// Lexicographic order on eigenvector columns: real part, then imaginary
// part, entry by entry. Used only to fix the order inside degenerate
// eigenvalue groups.
bool column_less(const ComplexMatrix& v, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const std::complex<double> x = v(i, a);
    const std::complex<double> y = v(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& m) {
  const ComplexMatrix h = require_hermitian(m, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailureError("hermitian_eig: eigensolver did not converge");
  }

  const Eigen::Index n = h.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const RealVector& vals = solver.eigenvalues();
  const ComplexMatrix& vecs = solver.eigenvectors();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     if (vals(a) != vals(b)) return vals(a) > vals(b);
                     return column_less(vecs, a, b);
                   });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = vals(order[static_cast<std::size_t>(k)]);
    out.eigenvectors.col(k) = vecs.col(order[static_cast<std::size_t>(k)]);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  const ComplexMatrix h = require_hermitian(m, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailureError(
        "hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const EigenSystem es = hermitian_eig(m);
  const double min_eig = es.eigenvalues(es.eigenvalues.size() - 1);
  if (min_eig < -kPsdClipTol) {
    throw NotPsdError("psd_sqrt: eigenvalue below -1e-10", min_eig);
  }
  // Eigenvalues at the double-precision noise floor are null-space rounding;
  // flooring them to exact zero keeps sqrt from amplifying 1e-17-scale noise
  // into 3e-9-scale spurious directions.
  const double floor_tol = 1e-14 * std::max(1.0, es.eigenvalues(0));
  RealVector roots = es.eigenvalues;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots(i) = roots(i) > floor_tol ? std::sqrt(roots(i)) : 0.0;
  }
  ComplexMatrix s = es.eigenvectors * roots.asDiagonal() *
                    es.eigenvectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

double trace_norm(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).cwiseAbs().sum();
}

double spectral_norm(const ComplexMatrix& m) {
  const RealVector vals = hermitian_eigenvalues(m);
  return vals.size() == 0 ? 0.0 : vals.cwiseAbs().maxCoeff();
}

}  // namespace qmetric
