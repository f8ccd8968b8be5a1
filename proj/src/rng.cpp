// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/rng.hpp"

#include <cmath>

namespace qmetric {

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  // splitmix64 finalizer over the combined value
  std::uint64_t z = h ^ (master + 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ComplexMatrix ginibre_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = std::complex<double>(re, im);
    }
  }
  return m;
}

ComplexMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so Q is Haar rather than QR-convention biased.
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::complex<double> d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : std::complex<double>(1.0, 0.0);
  }
  return q;
}

ComplexVector haar_vector(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = std::complex<double>(re, im);
  }
  return v / v.norm();
}

RealVector dirichlet_uniform(Eigen::Index n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealVector t(n);
  for (Eigen::Index i = 0; i < n; ++i) t(i) = expo(rng);
  return t / t.sum();
}

}  // namespace qmetric
