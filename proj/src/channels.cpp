// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/channels.hpp"

namespace qmetric {

KrausChannel KrausChannel::from_operators(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) {
    throw BadShapeError("KrausChannel: at least one Kraus operator required");
  }
  const Eigen::Index out = kraus.front().rows();
  const Eigen::Index in = kraus.front().cols();
  if (out == 0 || in == 0) {
    throw BadShapeError("KrausChannel: empty Kraus operator");
  }
  for (const ComplexMatrix& k : kraus) {
    if (k.rows() != out || k.cols() != in) {
      throw BadShapeError("KrausChannel: inconsistent Kraus operator shapes");
    }
  }

  ComplexMatrix completeness = ComplexMatrix::Zero(in, in);
  for (const ComplexMatrix& k : kraus) completeness += k.adjoint() * k;
  const double residual =
      (completeness - ComplexMatrix::Identity(in, in)).norm();
  if (residual > 1e-10) {
    throw InvalidChannelError(
        "KrausChannel: completeness relation violated (Frobenius residual " +
            std::to_string(residual) + ")",
        residual);
  }

  KrausChannel phi;
  phi.kraus_ = std::move(kraus);
  phi.in_dim_ = static_cast<int>(in);
  phi.out_dim_ = static_cast<int>(out);
  phi.completeness_residual_ = residual;
  return phi;
}

DensityMatrix apply_channel(const KrausChannel& phi, const DensityMatrix& rho) {
  if (rho.dim() != phi.in_dim()) {
    throw DimMismatchError("apply_channel: state dim does not match in_dim");
  }
  ComplexMatrix out = ComplexMatrix::Zero(phi.out_dim(), phi.out_dim());
  for (const ComplexMatrix& k : phi.kraus()) {
    out += k * rho.matrix() * k.adjoint();
  }
  return make_density(out, /*trace_tol=*/1e-9);
}

ComplexMatrix adjoint_apply(const KrausChannel& phi, const ComplexMatrix& x) {
  if (x.rows() != phi.out_dim() || x.cols() != phi.out_dim()) {
    throw DimMismatchError("adjoint_apply: observable dim does not match out_dim");
  }
  const ComplexMatrix h = require_hermitian(x, "adjoint_apply");
  ComplexMatrix out = ComplexMatrix::Zero(phi.in_dim(), phi.in_dim());
  for (const ComplexMatrix& k : phi.kraus()) {
    out += k.adjoint() * h * k;
  }
  return out;
}

KrausChannel sample_channel(int in_dim, int out_dim, int kraus_count,
                            Rng& rng) {
  if (in_dim < 1 || out_dim < 1 || kraus_count < 1) {
    throw BadShapeError("sample_channel: dims and kraus_count must be >= 1");
  }
  const Eigen::Index rows =
      static_cast<Eigen::Index>(kraus_count) * out_dim;
  if (rows < in_dim) {
    throw BadShapeError(
        "sample_channel: kraus_count * out_dim must be >= in_dim");
  }

  // Haar isometry: thin QR of a Ginibre matrix, phases fixed by the R
  // diagonal so the distribution is unitarily invariant.
  const ComplexMatrix g = ginibre_matrix(rows, in_dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, in_dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < in_dim; ++k) {
    const std::complex<double> d = r(k, k);
    const double mag = std::abs(d);
    q.col(k) *= (mag > 0.0) ? d / mag : std::complex<double>(1.0, 0.0);
  }

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(kraus_count));
  for (int j = 0; j < kraus_count; ++j) {
    kraus.push_back(q.middleRows(static_cast<Eigen::Index>(j) * out_dim,
                                 out_dim));
  }
  return KrausChannel::from_operators(std::move(kraus));
}

KrausChannel random_channel(int in_dim, int out_dim, int kraus_count,
                            std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return sample_channel(in_dim, out_dim, kraus_count, rng);
}

KrausChannel example2_channel() {
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a(1, 0) = 1.0;
  a(3, 2) = 1.0;
  ComplexMatrix b = ComplexMatrix::Zero(4, 4);
  b(1, 1) = 1.0;
  b(3, 3) = 1.0;
  return KrausChannel::from_operators({std::move(a), std::move(b)});
}

}  // namespace qmetric
