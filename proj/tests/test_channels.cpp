// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmetric/channels.hpp"
#include "qmetric/fidelity.hpp"

using namespace qmetric;

namespace {

DensityMatrix upper_half_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 0.5;
  return make_density(m);
}

DensityMatrix lower_half_state() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(2, 2) = m(3, 3) = 0.5;
  return make_density(m);
}

}  // namespace

TEST_CASE("example2_channel: completeness is exact on the 0/1 operators") {
  const KrausChannel phi = example2_channel();
  CHECK(phi.in_dim() == 4);
  CHECK(phi.out_dim() == 4);
  // Oracle: A^H A = diag(1,0,1,0) and B^H B = diag(0,1,0,1) by hand.
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (const ComplexMatrix& k : phi.kraus()) sum += k.adjoint() * k;
  CHECK((sum - ComplexMatrix::Identity(4, 4)).norm() == 0.0);
  CHECK(phi.completeness_residual() == 0.0);
}

TEST_CASE("example2_channel: action on the fixed rank-2 pair") {
  const KrausChannel phi = example2_channel();
  const DensityMatrix rho_out = apply_channel(phi, upper_half_state());
  const DensityMatrix sigma_out = apply_channel(phi, lower_half_state());

  ComplexMatrix expected_rho = ComplexMatrix::Zero(4, 4);
  expected_rho(1, 1) = 1.0;
  ComplexMatrix expected_sigma = ComplexMatrix::Zero(4, 4);
  expected_sigma(3, 3) = 1.0;
  CHECK((rho_out.matrix() - expected_rho).norm() == 0.0);
  CHECK((sigma_out.matrix() - expected_sigma).norm() == 0.0);

  // Super-fidelity drops 1/2 -> 0 while C rises sqrt(1/2) -> 1.
  CHECK(super_fidelity(upper_half_state(), lower_half_state()) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(super_fidelity(rho_out, sigma_out) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(metric_c(upper_half_state(), lower_half_state()) <
        metric_c(rho_out, sigma_out));
}

TEST_CASE("apply_channel: identity channel and dim checks") {
  const KrausChannel id =
      KrausChannel::from_operators({ComplexMatrix::Identity(3, 3)});
  Rng rng = make_rng(3);
  const DensityMatrix rho = sample_density(3, 2, rng);
  CHECK((apply_channel(id, rho).matrix() - rho.matrix()).norm() < 1e-14);

  const DensityMatrix qubit = sample_density(2, 2, rng);
  CHECK_THROWS_AS((void)apply_channel(id, qubit), DimMismatchError);
}

TEST_CASE("KrausChannel validation") {
  CHECK_THROWS_AS((void)KrausChannel::from_operators({}), BadShapeError);
  CHECK_THROWS_AS((void)KrausChannel::from_operators(
                      {ComplexMatrix::Identity(2, 2),
                       ComplexMatrix::Identity(3, 3)}),
                  BadShapeError);
  try {
    (void)KrausChannel::from_operators(
        {ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)});
    FAIL("expected InvalidChannelError");
  } catch (const InvalidChannelError& e) {
    CHECK(e.residual() > 1.0);
  }
}

TEST_CASE("adjoint_apply: unit, completeness, duality") {
  const KrausChannel id =
      KrausChannel::from_operators({ComplexMatrix::Identity(3, 3)});
  Rng rng = make_rng(5);
  const ComplexMatrix g = ginibre_matrix(3, 3, rng);
  const ComplexMatrix x = 0.5 * (g + g.adjoint());
  CHECK((adjoint_apply(id, x) - x).norm() < 1e-14);

  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + trial % 3;
    const KrausChannel phi = sample_channel(dim, dim, 1 + trial % 4, rng);

    // Phi*(I) = I for any trace-preserving channel.
    CHECK((adjoint_apply(phi, ComplexMatrix::Identity(dim, dim)) -
           ComplexMatrix::Identity(dim, dim))
              .norm() <= 1e-10);

    const DensityMatrix rho = sample_density(dim, 1 + trial % dim, rng);
    const ComplexMatrix h = ginibre_matrix(dim, dim, rng);
    const ComplexMatrix obs = 0.5 * (h + h.adjoint());
    const double lhs = (apply_channel(phi, rho).matrix() * obs).trace().real();
    const double rhs = (rho.matrix() * adjoint_apply(phi, obs)).trace().real();
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }

  CHECK_THROWS_AS((void)adjoint_apply(id, ComplexMatrix::Identity(2, 2)),
                  DimMismatchError);
}

TEST_CASE("random_channel: isometry construction") {
  const KrausChannel a = random_channel(3, 3, 2, 77);
  const KrausChannel b = random_channel(3, 3, 2, 77);
  REQUIRE(a.kraus().size() == 2);
  CHECK((a.kraus()[0] - b.kraus()[0]).norm() == 0.0);
  CHECK((a.kraus()[1] - b.kraus()[1]).norm() == 0.0);
  CHECK(a.completeness_residual() <= 1e-10);

  // Single Kraus operator with out = in is a unitary channel.
  const KrausChannel u = random_channel(4, 4, 1, 1);
  CHECK((u.kraus()[0] * u.kraus()[0].adjoint() -
         ComplexMatrix::Identity(4, 4))
            .norm() <= 1e-10);

  CHECK_THROWS_AS((void)random_channel(4, 1, 2, 0), BadShapeError);
  CHECK_THROWS_AS((void)random_channel(2, 2, 0, 0), BadShapeError);

  Rng rng = make_rng(9);
  for (int trial = 0; trial < 15; ++trial) {
    const int in_dim = 2 + trial % 3;
    const int out_dim = 2 + (trial + 1) % 3;
    const int min_kraus = (in_dim + out_dim - 1) / out_dim;
    const KrausChannel phi =
        sample_channel(in_dim, out_dim, min_kraus + trial % 3, rng);
    CHECK(phi.completeness_residual() <= 1e-10);
    const DensityMatrix rho = sample_density(phi.in_dim(), 1, rng);
    CHECK_NOTHROW((void)apply_channel(phi, rho));
  }
}
