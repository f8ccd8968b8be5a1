// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_CHANNELS_HPP_
#define QMETRIC_CHANNELS_HPP_

#include <cstdint>
#include <vector>

#include "qmetric/states.hpp"

namespace qmetric {

/// CPT map as a finite list of out_dim x in_dim Kraus operators with
/// sum_j K_j^H K_j = I within 1e-10 Frobenius. Immutable after construction.
class KrausChannel {
 public:
  /// Validates shapes and the completeness relation.
  /// Throws BadShapeError or InvalidChannelError.
  static KrausChannel from_operators(std::vector<ComplexMatrix> kraus);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  /// Frobenius residual of sum_j K_j^H K_j - I recorded at construction.
  double completeness_residual() const { return completeness_residual_; }

 private:
  KrausChannel() = default;
  std::vector<ComplexMatrix> kraus_;
  int in_dim_ = 0;
  int out_dim_ = 0;
  double completeness_residual_ = 0.0;
};

/// sum_j K_j rho K_j^H, revalidated as a density matrix with a trace
/// tolerance of 1e-9 to absorb accumulated rounding.
DensityMatrix apply_channel(const KrausChannel& phi, const DensityMatrix& rho);

/// Adjoint (dual) map sum_j K_j^H x K_j on a Hermitian out_dim x out_dim
/// observable; satisfies Tr[phi(rho) x] = Tr[rho phi*(x)].
ComplexMatrix adjoint_apply(const KrausChannel& phi, const ComplexMatrix& x);

/// Kraus operators cut from a Haar-random isometry (QR orthonormalization
/// of a Gaussian (kraus_count * out_dim) x in_dim matrix). Requires
/// kraus_count * out_dim >= in_dim. Deterministic given the seed.
KrausChannel random_channel(int in_dim, int out_dim, int kraus_count,
                            std::uint64_t seed);

/// Same sampler drawing from an existing stream.
KrausChannel sample_channel(int in_dim, int out_dim, int kraus_count, Rng& rng);

/// The 4 -> 4 channel Phi(g) = A g A^H + B g B^H with the fixed 0/1 operator
/// pair whose action sends diag(1/2,1/2,0,0) to diag(0,1,0,0) and
/// diag(0,0,1/2,1/2) to diag(0,0,0,1). Super-fidelity strictly decreases on
/// that pair, the standard counterexample to CPT expansivity of G.
KrausChannel example2_channel();

}  // namespace qmetric

#endif  // QMETRIC_CHANNELS_HPP_
