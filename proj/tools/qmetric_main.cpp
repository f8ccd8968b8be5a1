// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0
//
// qmetric: fidelity and super-fidelity distance measures between quantum
// states, plus a property-verification harness. See README.md for the file
// formats and subcommand reference.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qmetric/channels.hpp"
#include "qmetric/io.hpp"
#include "qmetric/metrics.hpp"
#include "qmetric/verify.hpp"

namespace {

using namespace qmetric;

// All numeric CLI output uses 12 significant digits.
std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void print_matrix(const ComplexMatrix& m, std::ostream& os) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : "") << num(m(i, j).real()) << (m(i, j).imag() < 0 ? "-" : "+")
         << num(std::abs(m(i, j).imag())) << "i";
    }
    os << "]\n";
  }
}

std::uint64_t seed_with_env_override(std::uint64_t seed) {
  if (const char* env = std::getenv("QMETRIC_SEED")) {
    return std::strtoull(env, nullptr, 0);
  }
  return seed;
}

int cmd_metric(const std::string& measure, const std::string& file_a,
               const std::string& file_b, const OptimizerOptions& opts) {
  const DensityMatrix a = load_state(file_a);
  const DensityMatrix b = load_state(file_b);

  if (measure == "F") {
    std::cout << num(uhlmann_fidelity(a, b)) << "\n";
  } else if (measure == "G") {
    std::cout << num(super_fidelity(a, b)) << "\n";
  } else if (measure == "A") {
    std::cout << num(metric_a(a, b)) << "\n";
  } else if (measure == "B") {
    std::cout << num(metric_b(a, b)) << "\n";
  } else if (measure == "C") {
    std::cout << num(metric_c(a, b)) << "\n";
  } else if (measure == "Dtr") {
    std::cout << num(trace_metric(a, b)) << "\n";
  } else if (measure == "Dpg") {
    std::cout << num(pg_metric(a, b).value) << "\n";
  } else if (measure == "Dg") {
    const MetricReport report = g_metric(a, b, opts);
    std::cout << num(report.value) << "\n";
    std::cout << "witness:\n";
    print_matrix(report.witness->matrix(), std::cout);
    std::cout << "diagnostics: restarts=" << report.diagnostics.restarts
              << " iterations=" << report.diagnostics.iterations
              << " residual=" << num(report.diagnostics.residual) << "\n";
  } else {
    throw CLI::ValidationError("unknown measure: " + measure);
  }
  return 0;
}

int cmd_verify(const std::string& config_path, std::string out_path) {
  RunConfig config;
  if (!config_path.empty()) {
    config = config_from_json(nlohmann::json::parse(read_text(config_path)));
  }
  config.seed = seed_with_env_override(config.seed);
  if (out_path.empty()) out_path = config.output_path;

  const VerifyReport report = run_verify(config, &std::cout);
  write_text_atomic(out_path, report_to_json(report, config).dump(2) + "\n");
  std::cout << "summary: pass=" << report.pass << " fail=" << report.fail
            << " report_only=" << report.report_only << "\n"
            << "report written to " << out_path << "\n";
  return report.fail > 0 ? 1 : 0;
}

struct Example1 {
  DensityMatrix rho;
  DensityMatrix sigma;
};

Example1 example1_states() {
  ComplexVector psi(4), phi(4);
  psi << std::sqrt(3.0) / 2.0, 0.0, 0.0, 0.5;
  phi << 0.5, 0.0, 0.0, std::sqrt(3.0) / 2.0;
  return {pure_from_vector(psi), pure_from_vector(phi)};
}

void print_claim(const std::string& label, double claimed, double computed) {
  std::cout << "  " << label << ": claimed " << num(claimed) << ", computed "
            << num(computed) << ", |deviation| "
            << num(std::abs(claimed - computed)) << "\n";
}

int cmd_reproduce(const std::string& id, const OptimizerOptions& opts,
                  std::uint64_t seed) {
  if (id == "ex1") {
    const auto [rho, sigma] = example1_states();
    std::cout << "two fixed two-qubit pure states, overlap sqrt(3)/2:\n";
    print_claim("F", 0.75, uhlmann_fidelity(rho, sigma));
    print_claim("D_G", 0.5, g_metric(rho, sigma, opts).value);
    print_claim("D_PG", 0.5, pg_metric(rho, sigma).value);
    const double bound = g_metric_bound(rho, sigma);
    print_claim("bound sqrt(3/8)", std::sqrt(3.0 / 8.0), bound);
    std::cout << "  strict gap bound - D_G = "
              << num(bound - g_metric(rho, sigma, opts).value) << "\n";
  } else if (id == "ex2") {
    ComplexMatrix rho_m = ComplexMatrix::Zero(4, 4);
    rho_m(0, 0) = rho_m(1, 1) = 0.5;
    ComplexMatrix sigma_m = ComplexMatrix::Zero(4, 4);
    sigma_m(2, 2) = sigma_m(3, 3) = 0.5;
    const DensityMatrix rho = make_density(rho_m);
    const DensityMatrix sigma = make_density(sigma_m);
    const KrausChannel phi = example2_channel();
    const DensityMatrix rho_out = apply_channel(phi, rho);
    const DensityMatrix sigma_out = apply_channel(phi, sigma);
    std::cout << "fixed 2-Kraus channel on two rank-2 states:\n";
    print_claim("G before", 0.5, super_fidelity(rho, sigma));
    print_claim("G after", 0.0, super_fidelity(rho_out, sigma_out));
    print_claim("C before", std::sqrt(0.5), metric_c(rho, sigma));
    print_claim("C after", 1.0, metric_c(rho_out, sigma_out));
    std::cout << "  G decreases and C increases under the channel\n";
  } else if (id == "prop1" || id == "prop2") {
    Rng rng = make_rng(derive_seed(seed, "reproduce." + id));
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const DensityMatrix rho = sample_density(2, 1 + i % 2, rng);
      const DensityMatrix sigma = sample_density(2, 2, rng);
      const double dev =
          id == "prop1"
              ? std::abs(pg_metric(rho, sigma).value - trace_metric(rho, sigma))
              : std::abs(g_metric(rho, sigma, opts).value - metric_c(rho, sigma));
      worst = std::max(worst, dev);
    }
    std::cout << "200 random qubit pairs:\n";
    if (id == "prop1") {
      std::cout << "  claimed D_PG = D_tr; max |D_PG - D_tr| = " << num(worst)
                << "\n";
    } else {
      std::cout << "  claimed D_G = sqrt(1-G); max |D_G - sqrt(1-G)| = "
                << num(worst) << "\n";
    }
  } else if (id == "prop3") {
    Rng rng = make_rng(derive_seed(seed, "reproduce.prop3"));
    double worst_dev = 0.0;
    double worst_excess = -1.0;
    for (int dim : {2, 3, 4}) {
      for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = sample_density(dim, 1 + i % dim, rng);
        const DensityMatrix sigma = sample_density(dim, dim, rng);
        const double pg = pg_metric(rho, sigma).value;
        worst_dev = std::max(
            worst_dev,
            std::abs(pg - spectral_norm(rho.matrix() - sigma.matrix())));
        const auto mc = verify_detail::pure_mc_max(
            rho.matrix() - sigma.matrix(), 10000, rng);
        worst_excess = std::max(worst_excess, mc.best_value - pg);
      }
    }
    std::cout << "60 random pairs, dims 2-4:\n"
              << "  claimed D_PG = spectral norm; max deviation = "
              << num(worst_dev) << "\n"
              << "  10^4-sample pure-state max minus D_PG (must be <= 0): "
              << num(worst_excess) << "\n";
  } else if (id == "bound13") {
    Rng rng = make_rng(derive_seed(seed, "reproduce.bound13"));
    double worst_slack = 1e300;
    double qubit_gap = 0.0;
    for (int dim : {2, 3, 4, 5}) {
      for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho = sample_density(dim, 1 + i % dim, rng);
        const DensityMatrix sigma = sample_density(dim, dim, rng);
        const double dg = g_metric(rho, sigma, opts).value;
        const double bound = g_metric_bound(rho, sigma);
        worst_slack = std::min(worst_slack, bound - dg);
        if (dim == 2) qubit_gap = std::max(qubit_gap, std::abs(bound - dg));
      }
    }
    std::cout << "200 random pairs, dims 2-5:\n"
              << "  claimed D_G <= sqrt(2(N-1)/N) sqrt(1-G); min slack = "
              << num(worst_slack) << "\n"
              << "  qubit case: claimed equality; max |bound - D_G| = "
              << num(qubit_gap) << "\n";
  } else {
    throw CLI::ValidationError("unknown id: " + id);
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"fidelity-family distance measures between quantum states"};
  app.require_subcommand(1);

  OptimizerOptions opts;
  const auto add_opt_flags = [&opts](CLI::App* cmd) {
    cmd->add_option("--tolerance", opts.tolerance,
                    "optimizer objective tolerance");
    cmd->add_option("--restarts", opts.restarts, "random optimizer restarts");
    cmd->add_option("--max-iterations", opts.max_iterations,
                    "optimizer iteration cap");
  };

  // metric
  std::string measure, file_a, file_b;
  CLI::App* metric = app.add_subcommand("metric", "compute a measure between two state files");
  metric->add_option("--measure", measure, "one of F, G, A, B, C, Dtr, Dpg, Dg")
      ->required()
      ->check(CLI::IsMember({"F", "G", "A", "B", "C", "Dtr", "Dpg", "Dg"}));
  metric->add_option("a", file_a, "first state JSON file")->required();
  metric->add_option("b", file_b, "second state JSON file")->required();
  add_opt_flags(metric);

  // verify
  std::string config_path, out_path;
  CLI::App* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_option("--config", config_path, "RunConfig JSON file");
  verify->add_option("--out", out_path, "report output path");

  // reproduce
  std::string repro_id;
  std::uint64_t repro_seed = 0x5EED;
  CLI::App* reproduce = app.add_subcommand("reproduce", "recompute a documented result");
  reproduce->add_option("--id", repro_id, "one of ex1, ex2, prop1, prop2, prop3, bound13")
      ->required()
      ->check(CLI::IsMember({"ex1", "ex2", "prop1", "prop2", "prop3", "bound13"}));
  reproduce->add_option("--seed", repro_seed, "sampling seed");
  add_opt_flags(reproduce);

  // random-state
  int rs_dim = 2, rs_rank = 1;
  std::uint64_t rs_seed = 0;
  std::string rs_out;
  CLI::App* random_state = app.add_subcommand("random-state", "sample a state to a JSON file");
  random_state->add_option("--dim", rs_dim, "Hilbert-space dimension")->required();
  random_state->add_option("--rank", rs_rank, "state rank")->required();
  random_state->add_option("--seed", rs_seed, "RNG seed")->required();
  random_state->add_option("--out", rs_out, "output file")->required();

  // apply-channel
  std::string ac_channel, ac_state, ac_out;
  CLI::App* apply = app.add_subcommand("apply-channel", "apply a Kraus channel to a state file");
  apply->add_option("--channel", ac_channel, "channel JSON file")->required();
  apply->add_option("--state", ac_state, "state JSON file")->required();
  apply->add_option("--out", ac_out, "output state file")->required();

  CLI11_PARSE(app, argc, argv);

  if (metric->parsed()) return cmd_metric(measure, file_a, file_b, opts);
  if (verify->parsed()) return cmd_verify(config_path, out_path);
  if (reproduce->parsed()) {
    return cmd_reproduce(repro_id, opts, seed_with_env_override(repro_seed));
  }
  if (random_state->parsed()) {
    save_state(rs_out, random_density(rs_dim, rs_rank,
                                      seed_with_env_override(rs_seed)));
    return 0;
  }
  if (apply->parsed()) {
    const KrausChannel phi = load_channel(ac_channel);
    const DensityMatrix rho = load_state(ac_state);
    save_state(ac_out, apply_channel(phi, rho));
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qmetric::BadConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qmetric::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
