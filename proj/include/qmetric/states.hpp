// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_STATES_HPP_
#define QMETRIC_STATES_HPP_

#include <cstdint>
#include <vector>

#include "qmetric/matops.hpp"
#include "qmetric/rng.hpp"

namespace qmetric {

/// Validated density matrix: Hermitian within 1e-10 (max-entry), unit trace
/// within 1e-10 (then renormalized exactly), eigenvalues >= -1e-10. The
/// stored matrix is the symmetrized, trace-renormalized input.
class DensityMatrix {
 public:
  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& matrix() const { return mat_; }

  friend DensityMatrix make_density(const ComplexMatrix& matrix,
                                    double trace_tol);

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Validates and normalizes `matrix` into a DensityMatrix.
/// Throws BadShapeError (non-square) or InvalidStateError with the failed
/// condition and offending residual. `trace_tol` exists because states
/// emerging from channel application carry slightly more rounding than
/// freshly constructed ones.
DensityMatrix make_density(const ComplexMatrix& matrix,
                           double trace_tol = 1e-10);

/// Bloch vector of length dim^2 - 1 over the su(dim) generator basis.
/// |coeffs| <= 1 is necessary but not sufficient for positivity; membership
/// in the state body is decided spectrally on conversion.
struct BlochState {
  int dim = 0;
  RealVector coeffs;
};

/// N^2 - 1 Hermitian traceless generators with Tr(g_j g_k) = 2 delta_jk.
/// For dim 2 these are the Pauli matrices in order (sigma_1, sigma_2,
/// sigma_3); for dim > 2 the generalized Gell-Mann set, grouped as all
/// symmetric pairs (j,k), j < k in row-major order, then all antisymmetric
/// pairs, then the diagonal generators.
struct GeneratorBasis {
  int dim = 0;
  std::vector<ComplexMatrix> generators;
};

GeneratorBasis gell_mann_basis(int dim);

/// rho(u) = (1/N)(I + sqrt(N(N-1)/2) sum_k u_k g_k). Throws
/// NotPositiveError when u lies outside the state body.
DensityMatrix bloch_to_density(const BlochState& b);

/// Inverse of bloch_to_density: u_k = Tr(rho g_k) * sqrt(N/(2(N-1))).
BlochState density_to_bloch(const DensityMatrix& rho);

/// Tr(rho^2), in [1/N, 1] up to rounding.
double purity(const DensityMatrix& rho);

/// vv^H / ||v||^2. Throws ZeroVectorError when ||v|| = 0.
DensityMatrix pure_from_vector(const ComplexVector& v);

/// Hilbert-Schmidt-style sample: A is dim x rank complex Gaussian and the
/// result is AA^H / Tr(AA^H). rank = 1 yields Haar-distributed pure states.
/// Deterministic given the seed.
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

/// Same sampler drawing from an existing stream (used by the property
/// suites so each suite owns one seeded generator).
DensityMatrix sample_density(int dim, int rank, Rng& rng);

}  // namespace qmetric

#endif  // QMETRIC_STATES_HPP_
