// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_RNG_HPP_
#define QMETRIC_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "qmetric/matops.hpp"

namespace qmetric {

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Stable sub-seed for a named stream (FNV-1a over the tag, mixed with the
/// master seed). Lets independent suites draw from independent generators so
/// serial and parallel runs agree.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag);

/// rows x cols matrix of standard complex Gaussians (re and im each N(0,1)).
ComplexMatrix ginibre_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with the phase fix
/// that makes the factorization unique).
ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng);

/// Haar-distributed unit vector in C^n.
ComplexVector haar_vector(Eigen::Index n, Rng& rng);

/// Uniform sample from the probability simplex (flat Dirichlet).
RealVector dirichlet_uniform(Eigen::Index n, Rng& rng);

}  // namespace qmetric

#endif  // QMETRIC_RNG_HPP_
