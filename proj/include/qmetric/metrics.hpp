// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QMETRIC_METRICS_HPP_
#define QMETRIC_METRICS_HPP_

#include <cstdint>
#include <optional>

#include "qmetric/fidelity.hpp"
#include "qmetric/states.hpp"

namespace qmetric {

enum class DistanceMeasure { Dtr, Dpg, Dg, DgOracle };

struct OptimizerOptions {
  double tolerance = 1e-8;   // objective residual accepted as converged
  int restarts = 16;         // random Dirichlet restarts (on top of uniform + vertices)
  long max_iterations = 10000;  // per restart
};

struct OptimizerDiagnostics {
  int restarts = 0;      // restarts actually evaluated
  long iterations = 0;   // total projected-gradient iterations
  double residual = 0.0; // |value - |G(rho,witness)-G(sigma,witness)||
};

/// A computed distance together with the state attaining it (when the
/// measure is defined by a maximization) and solver diagnostics.
struct MetricReport {
  DistanceMeasure measure;
  double value = 0.0;
  std::optional<DensityMatrix> witness;
  OptimizerDiagnostics diagnostics;
};

/// Spectrum of rho - sigma, sorted descending, with the extreme values
/// e_forward = delta_1 and e_backward = -delta_N.
struct SpectralSummary {
  RealVector deltas;
  double e_forward = 0.0;
  double e_backward = 0.0;
};

SpectralSummary spectral_summary(const DensityMatrix& rho,
                                 const DensityMatrix& sigma);

/// Trace metric (1/2) Tr|rho - sigma|, in [0, 1].
double trace_metric(const DensityMatrix& rho, const DensityMatrix& sigma);

/// E(rho, sigma) = largest eigenvalue of rho - sigma; equals the maximum of
/// Tr[tau (rho - sigma)] over pure tau. Not symmetric.
double e_value(const DensityMatrix& rho, const DensityMatrix& sigma);

/// PG-metric: the super-fidelity distance maximized over pure states, which
/// equals max(E(rho,sigma), E(sigma,rho)) = spectral norm of rho - sigma.
/// The witness is the eigenprojector of the dominant |eigenvalue| (forward
/// side on ties).
MetricReport pg_metric(const DensityMatrix& rho, const DensityMatrix& sigma);

/// G-metric: max over all density matrices tau of |G(rho,tau) - G(sigma,tau)|.
///
/// The N^2-1 dimensional maximization collapses exactly to two problems on
/// the probability simplex. Writing Delta = rho - sigma with eigenvalues
/// delta (descending) and c = sqrt(1-Tr rho^2) - sqrt(1-Tr sigma^2), the
/// objective at tau with spectrum t is Tr[Delta tau] + c sqrt(1 - |t|^2);
/// for a fixed spectrum the linear term is extremized when tau is diagonal
/// in Delta's eigenbasis (von Neumann trace inequality), and the sqrt term
/// depends on the spectrum alone. D_G is the larger of
///   max_t  delta.t + c sqrt(1 - |t|^2)   and
///   max_t -delta.t - c sqrt(1 - |t|^2)   over the simplex,
/// each solved by projected gradient ascent with multistart (uniform,
/// every vertex, opts.restarts Dirichlet points). On a tie the forward
/// branch supplies the witness.
MetricReport g_metric(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const OptimizerOptions& opts = {});

/// Brute-force lower bound on D_G: max of |G(rho,tau) - G(sigma,tau)| over
/// `samples` random density matrices cycling through all ranks, plus the
/// pure eigenprojectors of rho - sigma and the maximally mixed state.
/// Deterministic given the seed. Independent of the simplex reduction.
double g_metric_oracle(const DensityMatrix& rho, const DensityMatrix& sigma,
                       long samples, std::uint64_t seed);

/// Upper bound sqrt(2(N-1)/N) * sqrt(1 - G(rho,sigma)); tight for qubits.
double g_metric_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

namespace detail {

/// Euclidean projection onto {t >= 0, sum t = 1}.
RealVector project_to_simplex(const RealVector& v);

struct SimplexSolution {
  double value = 0.0;
  RealVector point;
  long iterations = 0;
  double final_gain = 0.0;
  bool hit_iteration_cap = false;
};

/// Maximizes coef.t + sqrt_weight * sqrt(max(0, 1 - |t|^2)) over the
/// probability simplex by multistart projected gradient ascent. rng drives
/// only the Dirichlet restarts; restart order is fixed, ties keep the
/// earlier restart, so the result is deterministic for a fixed seed.
SimplexSolution maximize_on_simplex(const RealVector& coef, double sqrt_weight,
                                    const OptimizerOptions& opts, Rng& rng);

}  // namespace detail

}  // namespace qmetric

#endif  // QMETRIC_METRICS_HPP_
