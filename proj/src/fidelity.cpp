// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/fidelity.hpp"

#include <algorithm>
#include <cmath>

namespace qmetric {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b,
                      const char* where) {
  if (a.dim() != b.dim()) {
    throw DimMismatchError(std::string(where) + ": states have different dims");
  }
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double super_fidelity_from_g_inputs(double overlap, double p1, double p2) {
  return overlap + std::sqrt(purity_radicand(p1) * purity_radicand(p2));
}

}  // namespace

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Entry-wise sum in fixed (column-major) order; swapping the arguments
  // conjugates every partial sum, so the real part is bit-identical.
  return a.cwiseProduct(b.conjugate()).sum().real();
}

double purity_radicand(double purity) {
  const double r = clamp01(1.0 - purity);
  return r < 1e-14 ? 0.0 : r;
}

double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "uhlmann_fidelity");
  // Tr sqrt(rho^{1/2} sigma rho^{1/2}) equals the trace norm of
  // sqrt(sigma) sqrt(rho): the eigenvalues mu_i of the sandwiched operator
  // are the squared singular values of that product. Working with the
  // singular values directly keeps rank-deficient inputs accurate; squaring
  // first would turn 1e-16-scale null-space noise into sqrt-amplified
  // 1e-8 contributions.
  const ComplexMatrix product = psd_sqrt(sigma.matrix()) * psd_sqrt(rho.matrix());
  Eigen::JacobiSVD<ComplexMatrix> svd(product);
  const double sum = svd.singularValues().sum();
  return sum * sum;
}

double qubit_fidelity_bloch(const BlochState& u, const BlochState& v) {
  if (u.dim != 2 || v.dim != 2) {
    throw NotQubitError("qubit_fidelity_bloch: requires dim 2");
  }
  const double dot = u.coeffs.dot(v.coeffs);
  const double ru = purity_radicand(u.coeffs.squaredNorm());
  const double rv = purity_radicand(v.coeffs.squaredNorm());
  return 0.5 * (1.0 + dot + std::sqrt(ru) * std::sqrt(rv));
}

double super_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "super_fidelity");
  const double overlap = hs_inner(rho.matrix(), sigma.matrix());
  return super_fidelity_from_g_inputs(overlap, purity(rho), purity(sigma));
}

double super_fidelity_bloch(const BlochState& u, const BlochState& v) {
  if (u.dim != v.dim) {
    throw DimMismatchError("super_fidelity_bloch: states have different dims");
  }
  // Membership in the state body is decided spectrally, not geometrically.
  (void)bloch_to_density(u);
  (void)bloch_to_density(v);
  const double n = u.dim;
  const double dot = u.coeffs.dot(v.coeffs);
  const double ru = purity_radicand(u.coeffs.squaredNorm());
  const double rv = purity_radicand(v.coeffs.squaredNorm());
  return (1.0 + (n - 1.0) * dot + (n - 1.0) * std::sqrt(ru * rv)) / n;
}

double metric_a(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::acos(std::sqrt(clamp01(super_fidelity(rho, sigma))));
}

double metric_b(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double g = clamp01(super_fidelity(rho, sigma));
  return std::sqrt(std::max(2.0 - 2.0 * std::sqrt(g), 0.0));
}

double metric_c(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::sqrt(1.0 - clamp01(super_fidelity(rho, sigma)));
}

}  // namespace qmetric
