// Copyright 2026 The qmetric Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per check, one printed line per
// criterion, exit code = number of failures. Every tolerance is pinned
// here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qmetric/channels.hpp"
#include "qmetric/metrics.hpp"
#include "qmetric/verify.hpp"

using namespace qmetric;

namespace {

int failures = 0;

void report(int index, bool ok, const std::string& label,
            const std::string& detail) {
  std::printf("[%s] C%d: %s (%s)\n", ok ? "PASS" : "FAIL", index, label.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return buf;
}

std::pair<DensityMatrix, DensityMatrix> example1_pair() {
  ComplexVector psi(4), phi(4);
  psi << std::sqrt(3.0) / 2.0, 0.0, 0.0, 0.5;
  phi << 0.5, 0.0, 0.0, std::sqrt(3.0) / 2.0;
  return {pure_from_vector(psi), pure_from_vector(phi)};
}

std::pair<DensityMatrix, DensityMatrix> example2_pair() {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = rho(1, 1) = 0.5;
  ComplexMatrix sigma = ComplexMatrix::Zero(4, 4);
  sigma(2, 2) = sigma(3, 3) = 0.5;
  return {make_density(rho), make_density(sigma)};
}

Rng criterion_rng(const char* tag) { return make_rng(derive_seed(0x5EED, tag)); }

void criterion1() {
  const auto start = std::chrono::steady_clock::now();
  const auto [rho, sigma] = example1_pair();
  const double dg = g_metric(rho, sigma).value;
  const double dpg = pg_metric(rho, sigma).value;
  const double f = uhlmann_fidelity(rho, sigma);
  const double bound = g_metric_bound(rho, sigma);
  const double elapsed = seconds_since(start);
  const bool ok = std::abs(dg - 0.5) <= 1e-6 && std::abs(dpg - 0.5) <= 1e-9 &&
                  std::abs(f - 0.75) <= 1e-9 &&
                  std::abs(bound - std::sqrt(3.0 / 8.0)) <= 1e-12 &&
                  bound - dg >= 0.11 && elapsed < 1.0;
  report(1, ok, "fixed pure-pair regression",
         fmt("D_G=%.9f D_PG=%.9f F=%.9f bound=%.9f gap=%.4f t=%.2fs", dg, dpg,
             f, bound, bound - dg, elapsed));
}

void criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const auto [rho, sigma] = example2_pair();
  const KrausChannel phi = example2_channel();
  const DensityMatrix rho_out = apply_channel(phi, rho);
  const DensityMatrix sigma_out = apply_channel(phi, sigma);
  const double g_before = super_fidelity(rho, sigma);
  const double g_after = super_fidelity(rho_out, sigma_out);
  const double c_before = metric_c(rho, sigma);
  const double c_after = metric_c(rho_out, sigma_out);
  const double elapsed = seconds_since(start);
  const bool ok = std::abs(g_before - 0.5) <= 1e-12 &&
                  std::abs(g_after) <= 1e-12 && g_after < g_before &&
                  c_after > c_before && elapsed < 1.0;
  report(2, ok, "fixed channel G-expansivity violation",
         fmt("G=%.12f->%.12f C=%.6f->%.6f t=%.2fs", g_before, g_after, c_before,
             c_after, elapsed));
}

void criterion3() {
  Rng rng = criterion_rng("acceptance.c3");
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = sample_density(2, 1 + i % 2, rng);
    const DensityMatrix sigma = sample_density(2, 2, rng);
    worst = std::max(worst, std::abs(pg_metric(rho, sigma).value -
                                     trace_metric(rho, sigma)));
  }
  report(3, worst <= 1e-9, "qubit D_PG equals trace metric",
         fmt("max dev %.3e over 200 pairs", worst));
}

void criterion4() {
  Rng rng = criterion_rng("acceptance.c4");
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = sample_density(2, 1 + i % 2, rng);
    const DensityMatrix sigma = sample_density(2, 2, rng);
    worst = std::max(worst, std::abs(g_metric(rho, sigma).value -
                                     std::sqrt(1.0 - super_fidelity(rho, sigma))));
  }
  report(4, worst <= 1e-6, "qubit D_G equals sqrt(1-G)",
         fmt("max dev %.3e over 200 pairs", worst));
}

void criterion5() {
  Rng rng = criterion_rng("acceptance.c5");
  double worst_dev = 0.0;
  double worst_excess = -1.0;
  for (int dim : {2, 3, 4}) {
    for (int i = 0; i < 200; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + i % dim, rng);
      const DensityMatrix sigma = sample_density(dim, dim, rng);
      const double pg = pg_metric(rho, sigma).value;
      worst_dev = std::max(
          worst_dev, std::abs(pg - spectral_norm(rho.matrix() - sigma.matrix())));
      const auto mc = verify_detail::pure_mc_max(rho.matrix() - sigma.matrix(),
                                                 10000, rng);
      worst_excess = std::max(worst_excess, mc.best_value - pg);
    }
  }
  report(5, worst_dev == 0.0 && worst_excess <= 1e-9,
         "D_PG is the spectral metric",
         fmt("max |D_PG - spectral| %.3e, MC excess %.3e", worst_dev,
             worst_excess));
}

void criterion6() {
  Rng rng = criterion_rng("acceptance.c6");
  double worst_slack = 1e300;
  double worst_qubit_gap = 0.0;
  for (int dim : {2, 3, 4, 5}) {
    for (int i = 0; i < 500; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + i % dim, rng);
      const DensityMatrix sigma = sample_density(dim, dim, rng);
      const double dg = g_metric(rho, sigma).value;
      const double bound = g_metric_bound(rho, sigma);
      worst_slack = std::min(worst_slack, bound - dg);
      if (dim == 2) {
        worst_qubit_gap = std::max(worst_qubit_gap, std::abs(bound - dg));
      }
    }
  }
  report(6, worst_slack >= -1e-9 && worst_qubit_gap <= 1e-6,
         "upper bound sqrt(2(N-1)/N) sqrt(1-G)",
         fmt("min slack %.3e, qubit max gap %.3e", worst_slack, worst_qubit_gap));
}

void criterion7() {
  Rng rng = criterion_rng("acceptance.c7");
  double pg_worst = 1e300;
  double g_worst = 1e300;
  double sym_pg = 0.0, sym_g = 0.0, id_pg = 0.0, id_g = 0.0;
  for (int dim : {2, 3, 4}) {
    for (int i = 0; i < 300; ++i) {
      const DensityMatrix rho = sample_density(dim, 1 + i % dim, rng);
      const DensityMatrix sigma = sample_density(dim, dim, rng);
      const DensityMatrix omega = sample_density(dim, 1 + (i + 1) % dim, rng);

      const double pg_rs = pg_metric(rho, sigma).value;
      pg_worst = std::min(pg_worst, pg_metric(rho, omega).value +
                                        pg_metric(sigma, omega).value - pg_rs);
      sym_pg = std::max(sym_pg, std::abs(pg_rs - pg_metric(sigma, rho).value));
      id_pg = std::max(id_pg, pg_metric(rho, rho).value);

      const double g_rs = g_metric(rho, sigma).value;
      g_worst = std::min(g_worst, g_metric(rho, omega).value +
                                      g_metric(sigma, omega).value - g_rs);
      sym_g = std::max(sym_g, std::abs(g_rs - g_metric(sigma, rho).value));
      id_g = std::max(id_g, g_metric(rho, rho).value);
    }
  }
  const bool ok = pg_worst >= -1e-8 && g_worst >= -1e-5 && sym_pg <= 1e-9 &&
                  sym_g <= 2e-8 && id_pg <= 1e-9 && id_g <= 1e-9;
  report(7, ok, "metric axioms for D_PG and D_G",
         fmt("triangle pg %.2e g %.2e, sym pg %.2e g %.2e, id pg %.2e g %.2e",
             pg_worst, g_worst, sym_pg, sym_g, id_pg, id_g));
}

void criterion8() {
  Rng rng = criterion_rng("acceptance.c8");
  double worst = 1e300;
  long violations = 0;
  for (int i = 0; i < 300; ++i) {
    const int dim = 2 + i % 3;
    const KrausChannel phi = sample_channel(dim, dim, 1 + i % 4, rng);
    const DensityMatrix rho = sample_density(dim, 1 + i % dim, rng);
    const DensityMatrix sigma = sample_density(dim, dim, rng);
    const double slack =
        pg_metric(rho, sigma).value -
        pg_metric(apply_channel(phi, rho), apply_channel(phi, sigma)).value;
    worst = std::min(worst, slack);
    if (slack < -1e-9) ++violations;
  }
  report(8, violations == 0 && worst >= -1e-9, "D_PG contracts under channels",
         fmt("min slack %.3e, violations %ld over 300 draws", worst, violations));
}

void criterion9() {
  Rng rng = criterion_rng("acceptance.c9");
  double worst = 1e300;
  long violations = 0;
  for (int i = 0; i < 200; ++i) {
    const int dim = 2 + i % 3;
    const int k = 2 + i % 3;
    const RealVector p = dirichlet_uniform(k, rng);
    ComplexMatrix mix_rho = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix mix_sigma = ComplexMatrix::Zero(dim, dim);
    double avg = 0.0;
    for (int j = 0; j < k; ++j) {
      const DensityMatrix rho_j = sample_density(dim, 1 + (i + j) % dim, rng);
      const DensityMatrix sigma_j = sample_density(dim, dim, rng);
      mix_rho += p(j) * rho_j.matrix();
      mix_sigma += p(j) * sigma_j.matrix();
      avg += p(j) * pg_metric(rho_j, sigma_j).value;
    }
    const double slack =
        avg - pg_metric(make_density(mix_rho), make_density(mix_sigma)).value;
    worst = std::min(worst, slack);
    if (slack < -1e-9) ++violations;
  }
  report(9, violations == 0 && worst >= -1e-9, "D_PG joint convexity",
         fmt("min slack %.3e, violations %ld over 200 mixtures", worst,
             violations));
}

void criterion10() {
  Rng rng = criterion_rng("acceptance.c10");
  double worst = 1e300;
  long pair_index = 0;
  const auto check_pair = [&](const DensityMatrix& rho,
                              const DensityMatrix& sigma) {
    const double g = g_metric(rho, sigma).value;
    const double oracle = g_metric_oracle(
        rho, sigma, 10000, derive_seed(0x5EED, "c10." + std::to_string(pair_index)));
    worst = std::min(worst, g - oracle);
    ++pair_index;
  };
  const auto [ex_rho, ex_sigma] = example1_pair();
  check_pair(ex_rho, ex_sigma);
  for (int dim : {2, 3, 4}) {
    for (int i = 0; i < 10; ++i) {
      check_pair(sample_density(dim, 1 + i % dim, rng),
                 sample_density(dim, dim, rng));
    }
  }
  report(10, worst >= -1e-6, "simplex reduction dominates the sampling oracle",
         fmt("min (D_G - oracle) %.3e over %ld pairs", worst, pair_index));
}

void criterion11(const VerifyReport& verify_report) {
  bool found_convexity = false;
  bool found_search = false;
  bool payloads_ok = true;
  double convexity_margin = 0.0, search_margin = 0.0;
  for (const PropertyVerdict& v : verify_report.verdicts) {
    if (v.status != VerdictStatus::ReportOnly) continue;
    if (v.property_id == "metrics.g.square_convexity.first_arg" ||
        v.property_id == "metrics.g.square_convexity.joint") {
      found_convexity = true;
      convexity_margin = std::min(convexity_margin, v.worst_margin);
      if (v.worst_margin < -1e-4 && !v.counterexample) payloads_ok = false;
    }
    if (v.property_id == "channels.dg.contractivity_search") {
      found_search = true;
      search_margin = v.worst_margin;
      // The fixed channel pair is a genuine violation; its certificate must
      // be in the report.
      if (!(v.worst_margin < 0.0) || !v.counterexample) payloads_ok = false;
    }
  }
  report(11, found_convexity && found_search && payloads_ok,
         "report-only claims populated with certificates",
         fmt("D_G^2 convexity margin %.3e, contractivity margin %.3e",
             convexity_margin, search_margin));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();

  // Criteria 11 and 12 share one full default-budget verification run.
  const auto start = std::chrono::steady_clock::now();
  const RunConfig config;
  const VerifyReport verify_report = run_verify(config);
  const double elapsed = seconds_since(start);
  criterion11(verify_report);
  report(12, verify_report.fail == 0 && elapsed < 300.0,
         "full verify suite under five minutes",
         fmt("pass=%d fail=%d report_only=%d t=%.1fs", verify_report.pass,
             verify_report.fail, verify_report.report_only, elapsed));

  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures;
}
