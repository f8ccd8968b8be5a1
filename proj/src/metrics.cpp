// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qmetric {

namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b,
                      const char* where) {
  if (a.dim() != b.dim()) {
    throw DimMismatchError(std::string(where) + ": states have different dims");
  }
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

// sqrt(1 - |t|^2) guarded against rounding below zero.
double sphere_gap(const RealVector& t) {
  return std::sqrt(std::max(0.0, 1.0 - t.squaredNorm()));
}

}  // namespace

namespace detail {

RealVector project_to_simplex(const RealVector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0;
  double theta = 0.0;
  int support = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumsum += u[static_cast<std::size_t>(j)];
    const double candidate = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[static_cast<std::size_t>(j)] - candidate > 0.0) {
      theta = candidate;
      support = static_cast<int>(j + 1);
    }
  }
  (void)support;
  return (v.array() - theta).cwiseMax(0.0);
}

namespace {

double objective(const RealVector& coef, double w, const RealVector& t) {
  return coef.dot(t) + w * sphere_gap(t);
}

// One projected-gradient ascent run. Step halving on non-improvement, mild
// growth on success. A single sub-1e-12 gain right after a halving cascade
// does not mean convergence (the step may simply be tiny mid-climb), so the
// run stops only once gains stay below 1e-12 for a stretch of iterations,
// or no improving step exists at the smallest step size.
SimplexSolution ascend_from(const RealVector& coef, double w, RealVector t,
                            const OptimizerOptions& opts) {
  constexpr int kStagnationWindow = 30;
  SimplexSolution sol;
  double value = objective(coef, w, t);
  double step = 0.25;
  double last_gain = 0.0;
  int stagnant = 0;
  bool capped = false;

  long iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    const double gap = std::max(sphere_gap(t), 1e-12);
    const RealVector grad = coef - (w / gap) * t;
    // The sqrt term has unbounded slope at the sphere boundary (simplex
    // vertices); capping the gradient norm keeps the trial step length
    // under control there while leaving the smooth interior untouched.
    const double gnorm = grad.norm();
    const RealVector direction = gnorm > 1.0 ? (grad / gnorm).eval() : grad;
    const RealVector candidate = project_to_simplex(t + step * direction);
    const double cand_value = objective(coef, w, candidate);
    const double gain = cand_value - value;
    if (gain > 0.0) {
      t = candidate;
      value = cand_value;
      last_gain = gain;
      step = std::min(step * 1.5, 4.0);
      stagnant = (gain < 1e-12) ? stagnant + 1 : 0;
    } else {
      step *= 0.5;
      ++stagnant;
      if (step < 1e-18) break;
    }
    if (stagnant >= kStagnationWindow) break;
  }
  capped = (iter >= opts.max_iterations);

  sol.value = value;
  sol.point = std::move(t);
  sol.iterations = iter;
  sol.final_gain = last_gain;
  sol.hit_iteration_cap = capped;
  return sol;
}

}  // namespace

SimplexSolution maximize_on_simplex(const RealVector& coef, double sqrt_weight,
                                    const OptimizerOptions& opts, Rng& rng) {
  const Eigen::Index n = coef.size();
  std::vector<RealVector> starts;
  starts.push_back(RealVector::Constant(n, 1.0 / static_cast<double>(n)));
  for (Eigen::Index k = 0; k < n; ++k) {
    RealVector vertex = RealVector::Zero(n);
    vertex(k) = 1.0;
    starts.push_back(std::move(vertex));
  }
  for (int r = 0; r < opts.restarts; ++r) {
    starts.push_back(dirichlet_uniform(n, rng));
  }

  SimplexSolution best;
  long total_iterations = 0;
  bool have_best = false;
  for (const RealVector& start : starts) {
    SimplexSolution sol = ascend_from(coef, sqrt_weight, start, opts);
    total_iterations += sol.iterations;
    if (!have_best || sol.value > best.value) {
      best = std::move(sol);
      have_best = true;
    }
  }
  best.iterations = total_iterations;
  return best;
}

}  // namespace detail

SpectralSummary spectral_summary(const DensityMatrix& rho,
                                 const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "spectral_summary");
  SpectralSummary s;
  s.deltas = hermitian_eigenvalues(rho.matrix() - sigma.matrix());
  s.e_forward = s.deltas(0);
  s.e_backward = -s.deltas(s.deltas.size() - 1);
  return s;
}

double trace_metric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_metric");
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

double e_value(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return spectral_summary(rho, sigma).e_forward;
}

MetricReport pg_metric(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "pg_metric");
  const EigenSystem es = hermitian_eig(rho.matrix() - sigma.matrix());
  const Eigen::Index n = es.eigenvalues.size();
  const double forward = es.eigenvalues(0);
  const double backward = -es.eigenvalues(n - 1);

  // Forward side wins ties.
  const Eigen::Index dominant = (forward >= backward) ? 0 : n - 1;
  const ComplexVector v = es.eigenvectors.col(dominant);
  const DensityMatrix witness = pure_from_vector(v);

  MetricReport report;
  report.measure = DistanceMeasure::Dpg;
  report.value = std::max(forward, backward);
  report.diagnostics.residual = std::abs(
      report.value -
      std::abs(super_fidelity(rho, witness) - super_fidelity(sigma, witness)));
  report.witness = witness;
  return report;
}

MetricReport g_metric(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const OptimizerOptions& opts) {
  require_same_dim(rho, sigma, "g_metric");
  const EigenSystem es = hermitian_eig(rho.matrix() - sigma.matrix());
  const RealVector& delta = es.eigenvalues;
  const double c = std::sqrt(purity_radicand(purity(rho))) -
                   std::sqrt(purity_radicand(purity(sigma)));

  // The Dirichlet restart stream is part of the result's determinism
  // contract, so it is seeded from fixed constants rather than wall clock.
  Rng rng = make_rng(derive_seed(0x5EED, "g_metric.restarts"));
  const detail::SimplexSolution fwd =
      detail::maximize_on_simplex(delta, c, opts, rng);
  const detail::SimplexSolution bwd =
      detail::maximize_on_simplex(-delta, -c, opts, rng);

  const bool forward_wins = fwd.value >= bwd.value;  // tie -> forward witness
  const detail::SimplexSolution& win = forward_wins ? fwd : bwd;
  if (win.hit_iteration_cap && win.final_gain > opts.tolerance) {
    throw ConvergenceFailureError(
        "g_metric: simplex ascent above tolerance after max iterations");
  }

  ComplexMatrix tau = es.eigenvectors *
                      win.point.cast<std::complex<double>>().asDiagonal() *
                      es.eigenvectors.adjoint();
  const DensityMatrix witness = make_density(0.5 * (tau + tau.adjoint()));

  MetricReport report;
  report.measure = DistanceMeasure::Dg;
  report.value = std::max(win.value, 0.0);
  report.witness = witness;
  report.diagnostics.restarts =
      2 * (1 + static_cast<int>(delta.size()) + opts.restarts);
  report.diagnostics.iterations = fwd.iterations + bwd.iterations;
  report.diagnostics.residual = std::abs(
      report.value -
      std::abs(super_fidelity(rho, witness) - super_fidelity(sigma, witness)));
  return report;
}

double g_metric_oracle(const DensityMatrix& rho, const DensityMatrix& sigma,
                       long samples, std::uint64_t seed) {
  require_same_dim(rho, sigma, "g_metric_oracle");
  const int n = rho.dim();
  double best = 0.0;
  const auto consider = [&](const DensityMatrix& tau) {
    best = std::max(best,
                    std::abs(super_fidelity(rho, tau) - super_fidelity(sigma, tau)));
  };

  const EigenSystem es = hermitian_eig(rho.matrix() - sigma.matrix());
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    consider(pure_from_vector(es.eigenvectors.col(k)));
  }
  consider(make_density(ComplexMatrix::Identity(n, n) / static_cast<double>(n)));

  Rng rng = make_rng(seed);
  for (long i = 0; i < samples; ++i) {
    const int rank = 1 + static_cast<int>(i % n);
    consider(sample_density(n, rank, rng));
  }
  return best;
}

double g_metric_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "g_metric_bound");
  const double n = rho.dim();
  const double g = clamp01(super_fidelity(rho, sigma));
  return std::sqrt(2.0 * (n - 1.0) / n) * std::sqrt(1.0 - g);
}

}  // namespace qmetric
