// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qmetric/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmetric/channels.hpp"
#include "qmetric/io.hpp"

namespace qmetric {

using nlohmann::json;

long PropertyContext::scaled(long spec_count) const {
  const double n = static_cast<double>(spec_count) * scale;
  return std::max<long>(1, std::llround(n));
}

void validate_config(const RunConfig& config) {
  if (config.dims.empty()) {
    throw BadConfigError("config: dims must not be empty");
  }
  for (int d : config.dims) {
    if (d < 2) throw BadConfigError("config: dims must all be >= 2");
  }
  if (config.samples_per_property < 1) {
    throw BadConfigError("config: samples_per_property must be >= 1");
  }
  if (config.optimizer.tolerance <= 0.0 || config.optimizer.restarts < 0 ||
      config.optimizer.max_iterations < 1) {
    throw BadConfigError("config: invalid optimizer options");
  }
}

RunConfig config_from_json(const json& j) {
  RunConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("samples_per_property")) {
    c.samples_per_property = j.at("samples_per_property").get<int>();
  }
  if (j.contains("optimizer")) {
    const json& o = j.at("optimizer");
    if (o.contains("tolerance")) c.optimizer.tolerance = o.at("tolerance").get<double>();
    if (o.contains("restarts")) c.optimizer.restarts = o.at("restarts").get<int>();
    if (o.contains("max_iterations")) {
      c.optimizer.max_iterations = o.at("max_iterations").get<long>();
    }
  }
  if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
  validate_config(c);
  return c;
}

json config_to_json(const RunConfig& c) {
  return json{{"seed", c.seed},
              {"dims", c.dims},
              {"samples_per_property", c.samples_per_property},
              {"optimizer",
               {{"tolerance", c.optimizer.tolerance},
                {"restarts", c.optimizer.restarts},
                {"max_iterations", c.optimizer.max_iterations}}},
              {"output_path", c.output_path}};
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "Pass";
    case VerdictStatus::Fail: return "Fail";
    case VerdictStatus::ReportOnly: return "ReportOnly";
  }
  return "Unknown";
}

namespace {

// Accumulates the most negative margin; captures a payload whenever a new
// worst margin falls below the capture threshold.
class MarginTracker {
 public:
  explicit MarginTracker(double capture_below) : capture_below_(capture_below) {}

  void observe(double margin, const std::function<json()>& payload = nullptr) {
    ++samples_;
    if (margin < worst_) {
      worst_ = margin;
      if (margin < capture_below_ && payload) payload_ = payload();
    }
  }

  PropertyOutcome outcome() const {
    PropertyOutcome out;
    out.worst_margin = samples_ == 0 ? 0.0 : worst_;
    out.samples = samples_;
    if (!payload_.is_null()) out.payload = payload_;
    return out;
  }

  long samples() const { return samples_; }

 private:
  double capture_below_;
  double worst_ = std::numeric_limits<double>::infinity();
  long samples_ = 0;
  json payload_;
};

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

json states_payload(std::initializer_list<std::pair<const char*, const DensityMatrix*>> entries) {
  json j;
  for (const auto& [name, state] : entries) {
    j[name] = state_to_json(*state);
  }
  return j;
}

int cycle(const std::vector<int>& values, long i) {
  return values[static_cast<std::size_t>(i % static_cast<long>(values.size()))];
}

// ---------------------------------------------------------------------------
// matops properties
// ---------------------------------------------------------------------------

PropertyOutcome prop_eig_reconstruction(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const std::vector<int> dims{2, 3, 4, 5, 6};
  const long n = ctx.scaled(100);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const ComplexMatrix m = random_hermitian(dim, ctx.rng);
    const EigenSystem es = hermitian_eig(m);
    const ComplexMatrix recon = es.eigenvectors *
                                es.eigenvalues.asDiagonal() *
                                es.eigenvectors.adjoint();
    const double scale = std::max(1.0, m.norm());
    t.observe(1e-9 * scale - (recon - m).norm(),
              [&] { return json{{"dim", dim}, {"matrix", matrix_to_json(m)}}; });
    const double orth = (es.eigenvectors.adjoint() * es.eigenvectors -
                         ComplexMatrix::Identity(dim, dim))
                            .norm();
    t.observe(1e-10 - orth,
              [&] { return json{{"dim", dim}, {"matrix", matrix_to_json(m)}}; });
  }
  return t.outcome();
}

PropertyOutcome prop_psd_sqrt_squares(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const std::vector<int> dims{2, 3, 4, 5, 6};
  const long n = ctx.scaled(100);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const int rank = 1 + static_cast<int>(i % dim);
    const ComplexMatrix a = ginibre_matrix(dim, rank, ctx.rng);
    const ComplexMatrix m = a * a.adjoint();
    const ComplexMatrix s = psd_sqrt(m);
    const double scale = std::max(1.0, m.norm());
    t.observe(1e-8 * scale - (s * s - m).norm(),
              [&] { return json{{"dim", dim}, {"matrix", matrix_to_json(m)}}; });
  }
  return t.outcome();
}

PropertyOutcome prop_norm_ordering(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const std::vector<int> dims{2, 3, 4, 5, 6};
  const long n = ctx.scaled(100);
  std::uniform_real_distribution<double> unif(0.5, 2.0);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const ComplexMatrix m = random_hermitian(dim, ctx.rng);
    const double tn = trace_norm(m);
    const double sn = spectral_norm(m);
    const auto payload = [&] {
      return json{{"dim", dim}, {"matrix", matrix_to_json(m)},
                  {"trace_norm", tn}, {"spectral_norm", sn}};
    };
    t.observe(tn - sn, payload);
    t.observe(sn, payload);

    // Rank-1: the two norms coincide.
    const ComplexVector x = haar_vector(dim, ctx.rng);
    const double s = (i % 2 == 0 ? 1.0 : -1.0) * unif(ctx.rng);
    const ComplexMatrix r1 = s * (x * x.adjoint());
    const double scale = std::max(1.0, std::abs(s));
    t.observe(1e-12 * scale - std::abs(trace_norm(r1) - spectral_norm(r1)),
              [&] { return json{{"dim", dim}, {"matrix", matrix_to_json(r1)}}; });
  }
  return t.outcome();
}

PropertyOutcome prop_norm_unitary_invariance(PropertyContext& ctx) {
  MarginTracker t(-1e-9);
  const std::vector<int> dims{2, 3, 4, 5, 6};
  const long n = ctx.scaled(100);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const ComplexMatrix m = random_hermitian(dim, ctx.rng);
    const ComplexMatrix u = haar_unitary(dim, ctx.rng);
    const ComplexMatrix conj = u * m * u.adjoint();
    const double drift = std::max(
        std::abs(trace_norm(m) - trace_norm(conj)),
        std::abs(spectral_norm(m) - spectral_norm(conj)));
    t.observe(-drift,
              [&] { return json{{"dim", dim}, {"matrix", matrix_to_json(m)}}; });
  }
  return t.outcome();
}

// ---------------------------------------------------------------------------
// states properties
// ---------------------------------------------------------------------------

PropertyOutcome prop_random_density_valid(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const std::vector<int> dims{2, 3, 4, 5, 6};
  const long n = ctx.scaled(1000);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const int rank = 1 + static_cast<int>(i % dim);
    const DensityMatrix rho = sample_density(dim, rank, ctx.rng);
    const auto payload = [&] { return states_payload({{"rho", &rho}}); };
    try {
      (void)make_density(rho.matrix());
      const ComplexMatrix& m = rho.matrix();
      const RealVector vals = hermitian_eigenvalues(m);
      const double headroom =
          std::min({1e-10 - hermiticity_residual(m),
                    1e-10 - std::abs(m.trace().real() - 1.0),
                    vals(vals.size() - 1) + 1e-10});
      t.observe(headroom, payload);
      const double p = purity(rho);
      t.observe(std::min(p - 1.0 / dim + 1e-12, 1.0 + 1e-12 - p), payload);
    } catch (const Error&) {
      t.observe(-1.0, payload);
    }
  }
  return t.outcome();
}

PropertyOutcome prop_bloch_round_trip(PropertyContext& ctx) {
  MarginTracker t(-1e-10);
  for (int dim : {2, 3, 4}) {
    const long n = ctx.scaled(200);
    for (long i = 0; i < n; ++i) {
      const int rank = 1 + static_cast<int>(i % dim);
      const DensityMatrix rho = sample_density(dim, rank, ctx.rng);
      const DensityMatrix back = bloch_to_density(density_to_bloch(rho));
      t.observe(-(back.matrix() - rho.matrix()).norm(),
                [&] { return states_payload({{"rho", &rho}}); });
    }
  }
  return t.outcome();
}

PropertyOutcome prop_purity_pure_iff_rank1(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    if (i % 2 == 0) {
      const DensityMatrix rho = sample_density(dim, 1, ctx.rng);
      const double top = hermitian_eigenvalues(rho.matrix())(0);
      t.observe(
          1e-9 - std::max(std::abs(purity(rho) - 1.0), std::abs(top - 1.0)),
          [&] { return states_payload({{"rho", &rho}}); });
    } else {
      // Blend toward the maximally mixed state so the sample is firmly mixed.
      const DensityMatrix raw =
          sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
      const ComplexMatrix m =
          0.9 * raw.matrix() +
          0.1 * ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
      const DensityMatrix rho = make_density(m);
      const double top = hermitian_eigenvalues(rho.matrix())(0);
      t.observe(std::min(1.0 - 1e-9 - purity(rho), 1.0 - 1e-9 - top),
                [&] { return states_payload({{"rho", &rho}}); });
    }
  }
  return t.outcome();
}

PropertyOutcome prop_bloch_positivity_boundary(PropertyContext& ctx) {
  MarginTracker t(0.0);
  // Qubits: every |u| <= 1 converts.
  const long n = ctx.scaled(200);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (long i = 0; i < n; ++i) {
    RealVector dir(3);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < 3; ++k) dir(k) = gauss(ctx.rng);
    dir.normalize();
    const double radius = (i % 4 == 0) ? 1.0 : unif(ctx.rng);
    BlochState b{2, radius * dir};
    try {
      const DensityMatrix rho = bloch_to_density(b);
      const RealVector vals = hermitian_eigenvalues(rho.matrix());
      t.observe(vals(vals.size() - 1) + 1e-10, [&] {
        return json{{"dim", 2}, {"bloch", std::vector<double>(
                                     b.coeffs.data(), b.coeffs.data() + 3)}};
      });
    } catch (const NotPositiveError&) {
      t.observe(-1.0, [&] {
        return json{{"dim", 2}, {"bloch", std::vector<double>(
                                     b.coeffs.data(), b.coeffs.data() + 3)}};
      });
    }
  }

  // Qutrits: at least one unit generator direction must fall outside the
  // state body.
  int rejected = 0;
  for (int k = 0; k < 8; ++k) {
    BlochState b{3, RealVector::Zero(8)};
    b.coeffs(k) = 1.0;
    try {
      (void)bloch_to_density(b);
    } catch (const NotPositiveError&) {
      ++rejected;
    }
  }
  t.observe(rejected >= 1 ? 0.0 : -1.0,
            [&] { return json{{"qutrit_rejected_directions", rejected}}; });
  return t.outcome();
}

// ---------------------------------------------------------------------------
// fidelity properties
// ---------------------------------------------------------------------------

PropertyOutcome prop_g_ge_f(PropertyContext& ctx) {
  MarginTracker t(-1e-8);
  const std::vector<int> dims{2, 3, 4, 5};
  const long n = ctx.scaled(500);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    t.observe(super_fidelity(rho, sigma) - uhlmann_fidelity(rho, sigma),
              [&] { return states_payload({{"rho", &rho}, {"sigma", &sigma}}); });
  }
  return t.outcome();
}

PropertyOutcome prop_qubit_g_equals_f(PropertyContext& ctx) {
  MarginTracker t(-1e-8);
  const long n = ctx.scaled(500);
  for (long i = 0; i < n; ++i) {
    const DensityMatrix rho = sample_density(2, 1 + static_cast<int>(i % 2), ctx.rng);
    const DensityMatrix sigma = sample_density(2, 2, ctx.rng);
    t.observe(-std::abs(super_fidelity(rho, sigma) - uhlmann_fidelity(rho, sigma)),
              [&] { return states_payload({{"rho", &rho}, {"sigma", &sigma}}); });
  }
  return t.outcome();
}

PropertyOutcome prop_c_metric_axioms(PropertyContext& ctx) {
  MarginTracker t(0.0);
  for (int dim : {2, 3, 4}) {
    const long n = ctx.scaled(500);
    for (long i = 0; i < n; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
      const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
      const DensityMatrix omega = sample_density(dim, 1 + static_cast<int>((i + 1) % dim), ctx.rng);
      const auto payload = [&] {
        return states_payload({{"rho", &rho}, {"sigma", &sigma}, {"omega", &omega}});
      };
      const double c_rs = metric_c(rho, sigma);
      // M1 nonnegativity; M2 identity (sqrt amplifies rounding, hence 1e-6)
      // and positivity for distinct random states; M3 exact symmetry; M4
      // triangle with the spec's 1e-9 slack.
      t.observe(c_rs, payload);
      t.observe(1e-6 - metric_c(rho, rho), payload);
      t.observe(c_rs - 1e-12, payload);
      t.observe(1e-15 - std::abs(c_rs - metric_c(sigma, rho)), payload);
      t.observe(metric_c(rho, omega) + metric_c(sigma, omega) - c_rs + 1e-9,
                payload);
    }
  }
  return t.outcome();
}

PropertyOutcome prop_fidelity_unitary_invariance(PropertyContext& ctx) {
  MarginTracker t(-1e-9);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    const ComplexMatrix u = haar_unitary(dim, ctx.rng);
    const DensityMatrix rho_u = make_density(u * rho.matrix() * u.adjoint());
    const DensityMatrix sigma_u = make_density(u * sigma.matrix() * u.adjoint());
    const double drift = std::max(
        std::abs(uhlmann_fidelity(rho, sigma) - uhlmann_fidelity(rho_u, sigma_u)),
        std::abs(super_fidelity(rho, sigma) - super_fidelity(rho_u, sigma_u)));
    t.observe(-drift,
              [&] { return states_payload({{"rho", &rho}, {"sigma", &sigma}}); });
  }
  return t.outcome();
}

KrausChannel draw_channel(PropertyContext& ctx, long i, int dim) {
  const int kraus = 1 + static_cast<int>(i % 4);
  return sample_channel(dim, dim, kraus, ctx.rng);
}

PropertyOutcome prop_f_cpt_expansive(PropertyContext& ctx) {
  MarginTracker t(-1e-8);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const KrausChannel phi = draw_channel(ctx, i, dim);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    t.observe(uhlmann_fidelity(apply_channel(phi, rho), apply_channel(phi, sigma)) -
                  uhlmann_fidelity(rho, sigma),
              [&] {
                json j = states_payload({{"rho", &rho}, {"sigma", &sigma}});
                j["channel"] = channel_to_json(phi);
                return j;
              });
  }
  return t.outcome();
}

// ---------------------------------------------------------------------------
// metrics properties
// ---------------------------------------------------------------------------

PropertyOutcome prop_metric_axioms_pg(PropertyContext& ctx) {
  MarginTracker t(0.0);
  for (int dim : {2, 3, 4}) {
    const long n = ctx.scaled(300);
    for (long i = 0; i < n; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
      const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
      const DensityMatrix omega = sample_density(dim, 1 + static_cast<int>((i + 1) % dim), ctx.rng);
      const auto payload = [&] {
        return states_payload({{"rho", &rho}, {"sigma", &sigma}, {"omega", &omega}});
      };
      const double d_rs = pg_metric(rho, sigma).value;
      t.observe(d_rs, payload);
      t.observe(1e-9 - std::abs(d_rs - pg_metric(sigma, rho).value), payload);
      t.observe(1e-9 - pg_metric(rho, rho).value, payload);
      t.observe(pg_metric(rho, omega).value + pg_metric(sigma, omega).value -
                    d_rs + 1e-8,
                payload);
    }
  }
  return t.outcome();
}

PropertyOutcome prop_metric_axioms_g(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const OptimizerOptions& opts = ctx.config.optimizer;
  for (int dim : {2, 3, 4}) {
    const long n = ctx.scaled(300);
    for (long i = 0; i < n; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
      const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
      const DensityMatrix omega = sample_density(dim, 1 + static_cast<int>((i + 1) % dim), ctx.rng);
      const auto payload = [&] {
        return states_payload({{"rho", &rho}, {"sigma", &sigma}, {"omega", &omega}});
      };
      const double d_rs = g_metric(rho, sigma, opts).value;
      t.observe(d_rs, payload);
      t.observe(2.0 * opts.tolerance -
                    std::abs(d_rs - g_metric(sigma, rho, opts).value),
                payload);
      t.observe(1e-9 - g_metric(rho, rho, opts).value, payload);
      t.observe(g_metric(rho, omega, opts).value +
                    g_metric(sigma, omega, opts).value - d_rs + 1e-5,
                payload);
    }
  }
  return t.outcome();
}

PropertyOutcome prop_ordering_chain(PropertyContext& ctx) {
  MarginTracker t(-1e-9);
  const std::vector<int> dims{2, 3, 4, 5};
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    const auto payload = [&] {
      return states_payload({{"rho", &rho}, {"sigma", &sigma}});
    };
    const double g = g_metric(rho, sigma, ctx.config.optimizer).value;
    t.observe(g - pg_metric(rho, sigma).value, payload);
    t.observe(g_metric_bound(rho, sigma) - g, payload);
  }
  return t.outcome();
}

PropertyOutcome prop_pg_pure_state_mc(PropertyContext& ctx) {
  MarginTracker t(0.0);
  for (int dim : {2, 3, 4}) {
    const long pairs = ctx.scaled(6);
    for (long i = 0; i < pairs; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
      const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
      const auto payload = [&] {
        return states_payload({{"rho", &rho}, {"sigma", &sigma}});
      };
      const MetricReport pg = pg_metric(rho, sigma);
      // Exact agreement with the spectral norm (same eigenvalue route).
      t.observe(-std::abs(pg.value -
                          spectral_norm(rho.matrix() - sigma.matrix())),
                payload);

      const ComplexMatrix delta = rho.matrix() - sigma.matrix();
      const auto mc = verify_detail::pure_mc_max(delta, 10000, ctx.rng);
      const double refined =
          std::max(mc.best_value,
                   verify_detail::refine_extreme_rayleigh(delta, mc.best_vector));
      t.observe(pg.value + 1e-9 - refined, payload);
      t.observe(refined - (pg.value - 1e-2), payload);
    }
  }
  return t.outcome();
}

PropertyOutcome prop_qubit_g_equals_c(PropertyContext& ctx) {
  MarginTracker t(-1e-6);
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const DensityMatrix rho = sample_density(2, 1 + static_cast<int>(i % 2), ctx.rng);
    const DensityMatrix sigma = sample_density(2, 2, ctx.rng);
    const double dg = g_metric(rho, sigma, ctx.config.optimizer).value;
    t.observe(-std::abs(dg - metric_c(rho, sigma)),
              [&] { return states_payload({{"rho", &rho}, {"sigma", &sigma}}); });
  }
  return t.outcome();
}

PropertyOutcome prop_qubit_pg_equals_tr(PropertyContext& ctx) {
  MarginTracker t(-1e-9);
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const DensityMatrix rho = sample_density(2, 1 + static_cast<int>(i % 2), ctx.rng);
    const DensityMatrix sigma = sample_density(2, 2, ctx.rng);
    t.observe(-std::abs(pg_metric(rho, sigma).value - trace_metric(rho, sigma)),
              [&] { return states_payload({{"rho", &rho}, {"sigma", &sigma}}); });
  }
  return t.outcome();
}

PropertyOutcome prop_pg_joint_convexity(PropertyContext& ctx) {
  MarginTracker t(-1e-9);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const int k = 2 + static_cast<int>(i % 3);
    const RealVector p = dirichlet_uniform(k, ctx.rng);
    ComplexMatrix mix_rho = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix mix_sigma = ComplexMatrix::Zero(dim, dim);
    double avg = 0.0;
    json components = json::array();
    for (int j = 0; j < k; ++j) {
      const DensityMatrix rho_j = sample_density(dim, 1 + static_cast<int>((i + j) % dim), ctx.rng);
      const DensityMatrix sigma_j = sample_density(dim, dim, ctx.rng);
      mix_rho += p(j) * rho_j.matrix();
      mix_sigma += p(j) * sigma_j.matrix();
      avg += p(j) * pg_metric(rho_j, sigma_j).value;
      components.push_back({{"p", p(j)},
                            {"rho", state_to_json(rho_j)},
                            {"sigma", state_to_json(sigma_j)}});
    }
    const double mixed =
        pg_metric(make_density(mix_rho), make_density(mix_sigma)).value;
    t.observe(avg - mixed, [&] { return json{{"components", components}}; });
  }
  return t.outcome();
}

PropertyOutcome prop_g_square_convexity(PropertyContext& ctx, bool joint) {
  MarginTracker t(-1e-4);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(200);
  const OptimizerOptions& opts = ctx.config.optimizer;
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const DensityMatrix rho1 = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix rho2 = sample_density(dim, dim, ctx.rng);
    const DensityMatrix sigma1 = sample_density(dim, 1 + static_cast<int>((i + 1) % dim), ctx.rng);
    const DensityMatrix sigma2 =
        joint ? sample_density(dim, dim, ctx.rng) : sigma1;
    const double d1 = g_metric(rho1, sigma1, opts).value;
    const double d2 = g_metric(rho2, sigma2, opts).value;
    for (int step = 1; step <= 9; ++step) {
      const double lambda = 0.1 * step;
      const DensityMatrix mix_rho = make_density(
          lambda * rho1.matrix() + (1.0 - lambda) * rho2.matrix());
      const DensityMatrix mix_sigma =
          joint ? make_density(lambda * sigma1.matrix() +
                               (1.0 - lambda) * sigma2.matrix())
                : sigma1;
      const double mixed = g_metric(mix_rho, mix_sigma, opts).value;
      t.observe(lambda * d1 * d1 + (1.0 - lambda) * d2 * d2 - mixed * mixed,
                [&] {
                  return json{{"lambda", lambda},
                              {"rho1", state_to_json(rho1)},
                              {"rho2", state_to_json(rho2)},
                              {"sigma1", state_to_json(sigma1)},
                              {"sigma2", state_to_json(sigma2)}};
                });
    }
  }
  return t.outcome();
}

// ---------------------------------------------------------------------------
// channels properties
// ---------------------------------------------------------------------------

PropertyOutcome prop_pg_contractive(PropertyContext& ctx) {
  MarginTracker t(-1e-9);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(300);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const KrausChannel phi = draw_channel(ctx, i, dim);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    t.observe(pg_metric(rho, sigma).value -
                  pg_metric(apply_channel(phi, rho), apply_channel(phi, sigma)).value,
              [&] {
                json j = states_payload({{"rho", &rho}, {"sigma", &sigma}});
                j["channel"] = channel_to_json(phi);
                return j;
              });
  }
  return t.outcome();
}

PropertyOutcome prop_channels_f_expansive(PropertyContext& ctx) {
  MarginTracker t(-1e-8);
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(300);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const KrausChannel phi = draw_channel(ctx, i, dim);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    t.observe(uhlmann_fidelity(apply_channel(phi, rho), apply_channel(phi, sigma)) -
                  uhlmann_fidelity(rho, sigma),
              [&] {
                json j = states_payload({{"rho", &rho}, {"sigma", &sigma}});
                j["channel"] = channel_to_json(phi);
                return j;
              });
  }
  return t.outcome();
}

// The fixed 0/1 channel pair where super-fidelity expansivity breaks. The
// property passes exactly when the violation is reproduced; the payload IS
// the counterexample, plus a tally of further violations found at random.
PropertyOutcome prop_example2_violation(PropertyContext& ctx) {
  ComplexMatrix rho_m = ComplexMatrix::Zero(4, 4);
  rho_m(0, 0) = 0.5;
  rho_m(1, 1) = 0.5;
  ComplexMatrix sigma_m = ComplexMatrix::Zero(4, 4);
  sigma_m(2, 2) = 0.5;
  sigma_m(3, 3) = 0.5;
  const DensityMatrix rho = make_density(rho_m);
  const DensityMatrix sigma = make_density(sigma_m);
  const KrausChannel phi = example2_channel();

  const double g_before = super_fidelity(rho, sigma);
  const double g_after =
      super_fidelity(apply_channel(phi, rho), apply_channel(phi, sigma));
  const double violation = g_before - g_after;  // expected 0.5

  long random_violations = 0;
  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(200);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const KrausChannel psi = draw_channel(ctx, i, dim);
    const DensityMatrix a = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix b = sample_density(dim, dim, ctx.rng);
    if (super_fidelity(apply_channel(psi, a), apply_channel(psi, b)) <
        super_fidelity(a, b) - 1e-12) {
      ++random_violations;
    }
  }

  PropertyOutcome out;
  out.worst_margin = violation - 1e-6;  // pass iff the violation is real
  out.samples = 1 + n;
  out.payload = json{{"channel", channel_to_json(phi)},
                     {"rho", state_to_json(rho)},
                     {"sigma", state_to_json(sigma)},
                     {"G_before", g_before},
                     {"G_after", g_after},
                     {"random_violations", random_violations},
                     {"random_draws", n}};
  return out;
}

PropertyOutcome prop_dg_contractivity_search(PropertyContext& ctx) {
  MarginTracker t(0.0);
  const OptimizerOptions& opts = ctx.config.optimizer;

  // Sample 0 is the fixed counterexample channel; D_G rises 0.5 -> 1 there.
  {
    ComplexMatrix rho_m = ComplexMatrix::Zero(4, 4);
    rho_m(0, 0) = 0.5;
    rho_m(1, 1) = 0.5;
    ComplexMatrix sigma_m = ComplexMatrix::Zero(4, 4);
    sigma_m(2, 2) = 0.5;
    sigma_m(3, 3) = 0.5;
    const DensityMatrix rho = make_density(rho_m);
    const DensityMatrix sigma = make_density(sigma_m);
    const KrausChannel phi = example2_channel();
    const double before = g_metric(rho, sigma, opts).value;
    const double after =
        g_metric(apply_channel(phi, rho), apply_channel(phi, sigma), opts).value;
    t.observe(before - after, [&] {
      json j = states_payload({{"rho", &rho}, {"sigma", &sigma}});
      j["channel"] = channel_to_json(phi);
      j["dg_before"] = before;
      j["dg_after"] = after;
      return j;
    });
  }

  const std::vector<int> dims{2, 3, 4};
  const long n = ctx.scaled(150);
  for (long i = 0; i < n; ++i) {
    const int dim = cycle(dims, i);
    const KrausChannel phi = draw_channel(ctx, i, dim);
    const DensityMatrix rho = sample_density(dim, 1 + static_cast<int>(i % dim), ctx.rng);
    const DensityMatrix sigma = sample_density(dim, dim, ctx.rng);
    const double before = g_metric(rho, sigma, opts).value;
    const double after =
        g_metric(apply_channel(phi, rho), apply_channel(phi, sigma), opts).value;
    t.observe(before - after, [&] {
      json j = states_payload({{"rho", &rho}, {"sigma", &sigma}});
      j["channel"] = channel_to_json(phi);
      j["dg_before"] = before;
      j["dg_after"] = after;
      return j;
    });
  }
  return t.outcome();
}

}  // namespace

namespace verify_detail {

PureMcResult pure_mc_max(const ComplexMatrix& delta, long samples, Rng& rng) {
  PureMcResult result;
  const Eigen::Index n = delta.rows();
  for (long i = 0; i < samples; ++i) {
    const ComplexVector x = haar_vector(n, rng);
    const double value = std::abs((x.adjoint() * delta * x)(0, 0).real());
    if (value > result.best_value) {
      result.best_value = value;
      result.best_vector = x;
    }
  }
  return result;
}

double refine_extreme_rayleigh(const ComplexMatrix& delta,
                               const ComplexVector& seed_vec) {
  const Eigen::Index n = delta.rows();
  // Shift by the induced 1-norm, a cheap upper bound on the spectral radius,
  // so both shifted matrices are PSD and power iteration heads for the
  // extreme eigenvector.
  const double shift = delta.cwiseAbs().colwise().sum().maxCoeff();
  double best = 0.0;
  for (const double sign : {1.0, -1.0}) {
    const ComplexMatrix b =
        sign * delta + shift * ComplexMatrix::Identity(n, n);
    ComplexVector x = seed_vec.size() == n
                          ? seed_vec
                          : ComplexVector::Constant(n, 1.0).eval();
    for (int it = 0; it < 500; ++it) {
      x = b * x;
      const double norm = x.norm();
      if (norm == 0.0) break;
      x /= norm;
    }
    best = std::max(best, std::abs((x.adjoint() * delta * x)(0, 0).real()));
  }
  return best;
}

}  // namespace verify_detail

const std::vector<PropertySpec>& property_registry() {
  static const std::vector<PropertySpec> registry = {
      {"matops.eig.reconstruction", true, 0.0, prop_eig_reconstruction},
      {"matops.psd_sqrt.squares", true, 0.0, prop_psd_sqrt_squares},
      {"matops.norm.ordering", true, 0.0, prop_norm_ordering},
      {"matops.norm.unitary_invariance", true, 1e-9,
       prop_norm_unitary_invariance},
      {"states.random_density.valid", true, 0.0, prop_random_density_valid},
      {"states.bloch.round_trip", true, 1e-10, prop_bloch_round_trip},
      {"states.purity.pure_iff_rank1", true, 0.0, prop_purity_pure_iff_rank1},
      {"states.bloch.positivity_boundary", true, 0.0,
       prop_bloch_positivity_boundary},
      {"fidelity.G_ge_F", false, 1e-8, prop_g_ge_f},
      {"fidelity.qubit.G_equals_F", true, 1e-8, prop_qubit_g_equals_f},
      {"fidelity.C.metric_axioms", true, 0.0, prop_c_metric_axioms},
      {"fidelity.unitary_invariance", true, 1e-9,
       prop_fidelity_unitary_invariance},
      {"fidelity.F.cpt_expansive", true, 1e-8, prop_f_cpt_expansive},
      {"metrics.axioms.pg", true, 0.0, prop_metric_axioms_pg},
      {"metrics.axioms.g", true, 0.0, prop_metric_axioms_g},
      {"metrics.ordering_chain", true, 1e-9, prop_ordering_chain},
      {"metrics.pg.pure_state_mc", true, 0.0, prop_pg_pure_state_mc},
      {"metrics.qubit.g_equals_C", true, 1e-6, prop_qubit_g_equals_c},
      {"metrics.qubit.pg_equals_tr", true, 1e-9, prop_qubit_pg_equals_tr},
      {"metrics.pg.joint_convexity", true, 1e-9, prop_pg_joint_convexity},
      {"metrics.g.square_convexity.first_arg", false, 1e-4,
       [](PropertyContext& ctx) { return prop_g_square_convexity(ctx, false); }},
      {"metrics.g.square_convexity.joint", false, 1e-4,
       [](PropertyContext& ctx) { return prop_g_square_convexity(ctx, true); }},
      {"channels.pg.contractive", true, 1e-9, prop_pg_contractive},
      {"channels.F.expansive", true, 1e-8, prop_channels_f_expansive},
      {"example2.G.expansivity.violation", true, 0.0, prop_example2_violation},
      {"channels.dg.contractivity_search", false, 0.0,
       prop_dg_contractivity_search},
  };
  return registry;
}

VerifyReport run_verify(const RunConfig& config, std::ostream* progress) {
  validate_config(config);
  VerifyReport report;
  for (const PropertySpec& spec : property_registry()) {
    PropertyContext ctx{config, make_rng(derive_seed(config.seed, spec.id)),
                        static_cast<double>(config.samples_per_property) / 500.0};
    const PropertyOutcome outcome = spec.run(ctx);

    PropertyVerdict v;
    v.property_id = spec.id;
    v.samples = outcome.samples;
    v.worst_margin = outcome.worst_margin;
    v.tolerance = spec.tolerance;
    const bool ok = outcome.worst_margin >= -spec.tolerance;
    v.status = spec.hard ? (ok ? VerdictStatus::Pass : VerdictStatus::Fail)
                         : VerdictStatus::ReportOnly;
    v.counterexample = outcome.payload;
    if (v.status == VerdictStatus::Fail && !v.counterexample) {
      v.counterexample = json{{"note", "margin below tolerance"},
                              {"worst_margin", outcome.worst_margin}};
    }

    switch (v.status) {
      case VerdictStatus::Pass: ++report.pass; break;
      case VerdictStatus::Fail: ++report.fail; break;
      case VerdictStatus::ReportOnly: ++report.report_only; break;
    }
    if (progress != nullptr) {
      (*progress) << "[" << to_string(v.status) << "] " << v.property_id
                  << "  samples=" << v.samples
                  << "  worst_margin=" << v.worst_margin << "\n";
      progress->flush();
    }
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

json verdict_to_json(const PropertyVerdict& v) {
  json j{{"property_id", v.property_id},
         {"samples", v.samples},
         {"worst_margin", v.worst_margin},
         {"tolerance", v.tolerance},
         {"status", to_string(v.status)}};
  if (v.counterexample) j["counterexample"] = *v.counterexample;
  return j;
}

json report_to_json(const VerifyReport& report, const RunConfig& config) {
  json verdicts = json::array();
  for (const PropertyVerdict& v : report.verdicts) {
    verdicts.push_back(verdict_to_json(v));
  }
  return json{{"config", config_to_json(config)},
              {"verdicts", std::move(verdicts)},
              {"summary",
               {{"pass", report.pass},
                {"fail", report.fail},
                {"report_only", report.report_only}}}};
}

}  // namespace qmetric
