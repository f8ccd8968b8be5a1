// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_FIDELITY_HPP_
#define QMETRIC_FIDELITY_HPP_

#include "qmetric/states.hpp"

namespace qmetric {

/// Fidelity-family scalar measures.
enum class Measure { F, G, A, B, C };

struct FidelityValue {
  Measure measure;
  double value;
};

/// Hilbert-Schmidt inner product Re Tr(a b) for Hermitian a, b, computed in
/// a fixed index order so the result is bit-identical under argument swap.
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// 1 - purity, clamped to [0, 1], with values at the double-precision noise
/// floor taken to exact zero: the radicands in the super-fidelity family are
/// non-Lipschitz at purity 1, and sqrt would amplify 1e-16 cancellation
/// residue of numerically pure states into 1e-8-scale drift.
double purity_radicand(double purity);

/// Uhlmann-Jozsa fidelity [Tr sqrt(rho^{1/2} sigma rho^{1/2})]^2, computed
/// as the squared trace norm of sqrt(sigma) sqrt(rho) (the singular values
/// of that product are the sqrt(mu_i) of the sandwiched operator).
double uhlmann_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Qubit fidelity in Bloch form:
/// (1/2)[1 + u.v + sqrt(1-|u|^2) sqrt(1-|v|^2)].
double qubit_fidelity_bloch(const BlochState& u, const BlochState& v);

/// Super-fidelity Tr(rho sigma) + sqrt((1-Tr rho^2)(1-Tr sigma^2)), each
/// radicand clamped to [0, 1]. Exactly symmetric in its arguments.
double super_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Super-fidelity in Bloch form:
/// (1/N)[1 + (N-1) u.v + (N-1) sqrt((1-|u|^2)(1-|v|^2))].
/// Both vectors must lie inside the state body (checked by conversion;
/// NotPositiveError propagates).
double super_fidelity_bloch(const BlochState& u, const BlochState& v);

/// A = arccos sqrt(G), in [0, pi/2].
double metric_a(const DensityMatrix& rho, const DensityMatrix& sigma);
/// B = sqrt(2 - 2 sqrt(G)), in [0, sqrt(2)].
double metric_b(const DensityMatrix& rho, const DensityMatrix& sigma);
/// C = sqrt(1 - G), in [0, 1]. A genuine metric on states.
double metric_c(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qmetric

#endif  // QMETRIC_FIDELITY_HPP_
