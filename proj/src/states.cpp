// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/states.hpp"

#include <cmath>
#include <complex>

namespace qmetric {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

DensityMatrix make_density(const ComplexMatrix& matrix, double trace_tol) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw BadShapeError("make_density: matrix is not square");
  }
  const double herm_res = hermiticity_residual(matrix);
  if (herm_res > kHermitianTol) {
    throw InvalidStateError(InvalidStateReason::NonHermitian, herm_res);
  }
  ComplexMatrix h = 0.5 * (matrix + matrix.adjoint());

  const double tr = h.trace().real();
  const double trace_res = std::abs(tr - 1.0);
  if (trace_res > trace_tol) {
    throw InvalidStateError(InvalidStateReason::TraceNotOne, trace_res);
  }
  h /= tr;

  const RealVector vals = hermitian_eigenvalues(h);
  const double min_eig = vals(vals.size() - 1);
  if (min_eig < -kPsdClipTol) {
    throw InvalidStateError(InvalidStateReason::NotPSD, min_eig);
  }
  return DensityMatrix(std::move(h));
}

GeneratorBasis gell_mann_basis(int dim) {
  if (dim < 2) {
    throw DimensionTooSmallError("gell_mann_basis: dim must be >= 2");
  }
  const Eigen::Index n = dim;
  GeneratorBasis basis;
  basis.dim = dim;
  basis.generators.reserve(static_cast<std::size_t>(n * n - 1));

  // Symmetric pair generators, (j,k) with j < k in row-major order.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(n, n);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      basis.generators.push_back(std::move(g));
    }
  }
  // Antisymmetric pair generators.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(n, n);
      g(j, k) = -kI;
      g(k, j) = kI;
      basis.generators.push_back(std::move(g));
    }
  }
  // Diagonal generators h_l = sqrt(2/(l(l+1))) (sum_{j<=l} E_jj - l E_ll),
  // l = 1..N-1 with 0-based E_ll at index l.
  for (Eigen::Index l = 1; l < n; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (Eigen::Index j = 0; j < l; ++j) g(j, j) = scale;
    g(l, l) = -scale * static_cast<double>(l);
    basis.generators.push_back(std::move(g));
  }

  // For dim 2 the loops above produce exactly (sigma_1, sigma_2, sigma_3).
  return basis;
}

DensityMatrix bloch_to_density(const BlochState& b) {
  if (b.dim < 2) {
    throw DimensionTooSmallError("bloch_to_density: dim must be >= 2");
  }
  const Eigen::Index expected = static_cast<Eigen::Index>(b.dim) * b.dim - 1;
  if (b.coeffs.size() != expected) {
    throw BadShapeError("bloch_to_density: coefficient vector has wrong length");
  }
  const double norm = b.coeffs.norm();
  if (norm > 1.0 + 1e-12) {
    // |u| > 1 forces Tr(rho^2) > 1, which no PSD unit-trace operator allows.
    throw NotPositiveError("bloch_to_density: |u| exceeds 1", norm);
  }

  const GeneratorBasis basis = gell_mann_basis(b.dim);
  const double n = b.dim;
  const double scale = std::sqrt(n * (n - 1.0) / 2.0);
  ComplexMatrix m = ComplexMatrix::Identity(b.dim, b.dim);
  for (Eigen::Index k = 0; k < expected; ++k) {
    m += scale * b.coeffs(k) * basis.generators[static_cast<std::size_t>(k)];
  }
  m /= n;

  const RealVector vals = hermitian_eigenvalues(m);
  const double min_eig = vals(vals.size() - 1);
  if (min_eig < -kPsdClipTol) {
    throw NotPositiveError(
        "bloch_to_density: Bloch vector lies outside the state body", min_eig);
  }
  return make_density(m);
}

BlochState density_to_bloch(const DensityMatrix& rho) {
  const int n = rho.dim();
  const GeneratorBasis basis = gell_mann_basis(n);
  const double inv_scale = std::sqrt(n / (2.0 * (n - 1.0)));
  BlochState b;
  b.dim = n;
  b.coeffs.resize(static_cast<Eigen::Index>(n) * n - 1);
  for (std::size_t k = 0; k < basis.generators.size(); ++k) {
    b.coeffs(static_cast<Eigen::Index>(k)) =
        (rho.matrix() * basis.generators[k]).trace().real() * inv_scale;
  }
  return b;
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

DensityMatrix pure_from_vector(const ComplexVector& v) {
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) {
    throw ZeroVectorError("pure_from_vector: zero vector");
  }
  ComplexMatrix m = v * v.adjoint() / norm2;
  return make_density(m);
}

DensityMatrix sample_density(int dim, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw BadRankError("sample_density: rank must lie in [1, dim]");
  }
  const ComplexMatrix a = ginibre_matrix(dim, rank, rng);
  ComplexMatrix m = a * a.adjoint();
  m /= m.trace().real();
  return make_density(0.5 * (m + m.adjoint()));
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_density(dim, rank, rng);
}

}  // namespace qmetric
