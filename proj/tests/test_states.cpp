// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qmetric/states.hpp"

using namespace qmetric;

TEST_CASE("make_density: accepts valid states") {
  const DensityMatrix mixed = make_density(ComplexMatrix::Identity(2, 2) / 2.0);
  CHECK(mixed.dim() == 2);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 0.7;
  d(1, 1) = 0.3;
  CHECK_NOTHROW((void)make_density(d));
}

TEST_CASE("make_density: rejection reasons carry residuals") {
  ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
  neg(0, 0) = 1.2;
  neg(1, 1) = -0.2;
  try {
    (void)make_density(neg);
    FAIL("expected InvalidStateError");
  } catch (const InvalidStateError& e) {
    CHECK(e.reason() == InvalidStateReason::NotPSD);
    CHECK(e.residual() == doctest::Approx(-0.2).epsilon(1e-12));
  }

  ComplexMatrix skew(2, 2);
  skew << 0.5, 0.1, -0.1, 0.5;
  try {
    (void)make_density(skew);
    FAIL("expected InvalidStateError");
  } catch (const InvalidStateError& e) {
    CHECK(e.reason() == InvalidStateReason::NonHermitian);
  }

  ComplexMatrix off = ComplexMatrix::Identity(2, 2) * 0.6;
  try {
    (void)make_density(off);
    FAIL("expected InvalidStateError");
  } catch (const InvalidStateError& e) {
    CHECK(e.reason() == InvalidStateReason::TraceNotOne);
    CHECK(e.residual() == doctest::Approx(0.2).epsilon(1e-12));
  }

  CHECK_THROWS_AS((void)make_density(ComplexMatrix::Zero(2, 3)), BadShapeError);
}

TEST_CASE("gell_mann_basis: dim 2 is the Pauli triple in order") {
  const GeneratorBasis basis = gell_mann_basis(2);
  REQUIRE(basis.generators.size() == 3);
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK((basis.generators[0] - sx).norm() == 0.0);
  CHECK((basis.generators[1] - sy).norm() == 0.0);
  CHECK((basis.generators[2] - sz).norm() == 0.0);
}

TEST_CASE("gell_mann_basis: traceless Hermitian orthogonal family") {
  for (int dim : {2, 3, 4, 5}) {
    const GeneratorBasis basis = gell_mann_basis(dim);
    REQUIRE(static_cast<int>(basis.generators.size()) == dim * dim - 1);
    for (std::size_t j = 0; j < basis.generators.size(); ++j) {
      const ComplexMatrix& g = basis.generators[j];
      CHECK(std::abs(g.trace()) <= 1e-12);
      CHECK(hermiticity_residual(g) <= 1e-12);
      for (std::size_t k = 0; k < basis.generators.size(); ++k) {
        const double expected = (j == k) ? 2.0 : 0.0;
        CHECK(std::abs((g * basis.generators[k]).trace().real() - expected) <=
              1e-12);
      }
    }
  }
  CHECK_THROWS_AS((void)gell_mann_basis(1), DimensionTooSmallError);
}

TEST_CASE("bloch_to_density: poles of the qubit ball") {
  const DensityMatrix center = bloch_to_density({2, RealVector::Zero(3)});
  CHECK((center.matrix() - ComplexMatrix::Identity(2, 2) / 2.0).norm() < 1e-12);

  RealVector up(3);
  up << 0.0, 0.0, 1.0;
  const DensityMatrix pole = bloch_to_density({2, up});
  CHECK(pole.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pole.matrix()(1, 1).real() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("bloch_to_density: qutrit generator direction leaves the body") {
  // Oracle: (1/3)(I + sqrt(3) g) for the first symmetric generator has
  // eigenvalues (1 +/- sqrt(3))/3 and 1/3; the minus branch is negative.
  const double bad_eig = (1.0 - std::sqrt(3.0)) / 3.0;
  REQUIRE(bad_eig < 0.0);
  RealVector u = RealVector::Zero(8);
  u(0) = 1.0;
  try {
    (void)bloch_to_density({3, u});
    FAIL("expected NotPositiveError");
  } catch (const NotPositiveError& e) {
    CHECK(e.min_eigenvalue() == doctest::Approx(bad_eig).epsilon(1e-10));
  }

  RealVector overlong = RealVector::Zero(3);
  overlong(0) = 1.5;
  CHECK_THROWS_AS((void)bloch_to_density({2, overlong}), NotPositiveError);
}

TEST_CASE("density_to_bloch: fixed values and round trip") {
  for (int dim : {2, 3, 4}) {
    const BlochState b = density_to_bloch(
        make_density(ComplexMatrix::Identity(dim, dim) / double(dim)));
    CHECK(b.coeffs.norm() < 1e-12);
  }

  ComplexMatrix pure = ComplexMatrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  const BlochState pole = density_to_bloch(make_density(pure));
  CHECK(pole.coeffs(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pole.coeffs(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pole.coeffs(2) == doctest::Approx(1.0).epsilon(1e-12));

  Rng rng = make_rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = 2 + trial % 3;
    const DensityMatrix rho = sample_density(dim, 1 + trial % dim, rng);
    const DensityMatrix back = bloch_to_density(density_to_bloch(rho));
    CHECK((back.matrix() - rho.matrix()).norm() <= 1e-10);
  }
}

TEST_CASE("purity: endpoints and the qubit radius formula") {
  Rng rng = make_rng(29);
  CHECK(purity(sample_density(3, 1, rng)) == doctest::Approx(1.0).epsilon(1e-12));
  for (int dim : {2, 3, 5}) {
    CHECK(purity(make_density(ComplexMatrix::Identity(dim, dim) / double(dim))) ==
          doctest::Approx(1.0 / dim).epsilon(1e-12));
  }

  // Oracle: expanding Tr rho(u)^2 in the Pauli basis gives (1 + r^2)/2.
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double r : {0.0, 0.25, 0.6, 1.0}) {
    RealVector dir(3);
    for (int k = 0; k < 3; ++k) dir(k) = gauss(rng);
    dir.normalize();
    const DensityMatrix rho = bloch_to_density({2, (r * dir).eval()});
    CHECK(purity(rho) == doctest::Approx((1.0 + r * r) / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("random_density: determinism, rank, validity") {
  const DensityMatrix a = random_density(3, 2, 99);
  const DensityMatrix b = random_density(3, 2, 99);
  CHECK(a.matrix() == b.matrix());

  CHECK(purity(random_density(4, 1, 5)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)random_density(3, 4, 0), BadRankError);
  CHECK_THROWS_AS((void)random_density(3, 0, 0), BadRankError);

  Rng rng = make_rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 2 + trial % 5;
    const DensityMatrix rho = sample_density(dim, 1 + trial % dim, rng);
    CHECK_NOTHROW((void)make_density(rho.matrix()));
  }
}

TEST_CASE("pure_from_vector: normalization and the fixed two-qubit state") {
  ComplexVector e0(2);
  e0 << 1.0, 0.0;
  CHECK(pure_from_vector(e0).matrix()(0, 0).real() == doctest::Approx(1.0));

  ComplexVector doubled(2);
  doubled << 2.0, 0.0;
  CHECK((pure_from_vector(doubled).matrix() - pure_from_vector(e0).matrix())
            .norm() < 1e-14);

  ComplexVector psi(4);
  psi << std::sqrt(3.0) / 2.0, 0.0, 0.0, 0.5;
  const DensityMatrix rho = pure_from_vector(psi);
  CHECK(rho.matrix()(0, 0).real() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rho.matrix()(3, 3).real() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(rho.matrix()(0, 3).real() ==
        doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)pure_from_vector(ComplexVector::Zero(3)), ZeroVectorError);
}

TEST_CASE("purity 1 iff top eigenvalue 1") {
  Rng rng = make_rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 3;
    const bool pure = trial % 2 == 0;
    const DensityMatrix rho =
        pure ? sample_density(dim, 1, rng) : sample_density(dim, dim, rng);
    const double top = hermitian_eigenvalues(rho.matrix())(0);
    if (pure) {
      CHECK(std::abs(purity(rho) - 1.0) <= 1e-9);
      CHECK(std::abs(top - 1.0) <= 1e-9);
    } else {
      CHECK((std::abs(purity(rho) - 1.0) <= 1e-9) ==
            (std::abs(top - 1.0) <= 1e-9));
    }
  }
}
