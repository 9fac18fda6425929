// Copyright 2026 The prbench Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes within its tolerance and runtime budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "prbench/cdp.hpp"
#include "prbench/config.hpp"
#include "prbench/diagnostics.hpp"
#include "prbench/harness.hpp"
#include "prbench/init.hpp"
#include "prbench/linalg.hpp"
#include "prbench/loo.hpp"
#include "prbench/objective.hpp"
#include "prbench/pgm.hpp"
#include "prbench/rng.hpp"
#include "test_util.hpp"

namespace {

using namespace prbench;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0,
                double d = 0.0, double e = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c, d, e);
  return buf;
}

// 1. Analytic gradient and Hessian against central differences.
Outcome derivatives() {
  const Index n = 20, m = 60;
  const SensingEnsemble ens = sample_ensemble(m, n, 11);
  const GroundTruth gt = unit_ground_truth(n, 11);
  const Observations obs = observe(ens, gt);
  double worst_g = 0.0, worst_h = 0.0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Vector x = testing::gaussian_vector(n, k, streams::kProbe);
    const Vector g = gradient(ens, obs, x);
    const Vector g_fd = testing::fd_gradient(
        [&](const Vector& v) { return cost(ens, obs, v); }, x, 1e-5);
    worst_g = std::max(worst_g, (g - g_fd).norm() / g_fd.norm());
    const Matrix H = hessian(ens, obs, x);
    const Matrix H_fd = testing::fd_jacobian(
        [&](const Vector& v) { return gradient(ens, obs, v); }, x, 1e-5);
    worst_h = std::max(worst_h, (H - H_fd).norm() / H_fd.norm());
  }
  return {worst_g < 1e-6 && worst_h < 1e-5,
          fmt("max rel err gradient=%.3g (<1e-6) hessian=%.3g (<1e-5)", worst_g, worst_h)};
}

// 2. Spectral init on the population matrix and with m = 1e6 samples.
Outcome spectral_population() {
  const Index n = 5;
  const Vector x = unit_ground_truth(n, 3).x_star * 1.7;
  const LinearOperator expected = [&](const Vector& v) -> Vector {
    return x.squaredNorm() * v + 2.0 * x * x.dot(v);
  };
  const SpectralReport pop = spectral_init(expected, n, 3);
  const double d_pop = dist(pop.x0, x);
  const GroundTruth gt(x);
  const SensingEnsemble ens = sample_ensemble(1000000, n, 3);
  const SpectralReport mc = spectral_init(ens, observe(ens, gt));
  const double d_mc = dist(mc.x0, x);
  return {d_pop <= 1e-8 && d_mc <= 0.01,
          fmt("population dist=%.3g (<=1e-8) monte-carlo dist=%.3g (<=0.01)", d_pop, d_mc)};
}

// 3. Rates on the kappa = 100 quadratic.
Outcome quadratic_rates() {
  const double gd = quadratic_oracle(1.0, 100.0, Method::kGradientDescent);
  const double hb = quadratic_oracle(1.0, 100.0, Method::kPolyak);
  const double nag = quadratic_oracle(1.0, 100.0, Method::kNesterov);
  const bool ok = gd <= 0.995 && hb <= 9.0 / 11.0 + 0.02 && nag <= 0.92 && hb < gd &&
                  nag < gd;
  return {ok, fmt("gd=%.6f (<=0.995) hb=%.6f (<=%.6f) nag=%.6f (<=0.92)", gd, hb,
                  9.0 / 11.0 + 0.02, nag)};
}

// 4. Spectral radius of the assembled contraction matrices.
Outcome contraction_radius() {
  const double mu = 1.0, L = 100.0;
  const double rk = std::sqrt(L / mu);
  Matrix H = Matrix::Zero(2, 2);
  H(0, 0) = mu;
  H(1, 1) = L;
  const QuadraticParams hb = quadratic_params(mu, L, Method::kPolyak);
  const QuadraticParams nag = quadratic_params(mu, L, Method::kNesterov);
  const double r_hb = contraction_matrix_hb(H, hb.eta, hb.beta).spectral_radius;
  const double r_nag = contraction_matrix_nag(H, nag.eta, nag.beta).spectral_radius;
  const double f_hb = (rk - 1.0) / (rk + 1.0);
  const double f_nag = 1.0 - 1.0 / rk;
  const QuadraticParams hb_unsq =
      quadratic_params(mu, L, Method::kPolyak, HeavyBallMomentum::kUnsquared);
  const double r_unsq = contraction_matrix_hb(H, hb_unsq.eta, hb_unsq.beta).spectral_radius;
  const bool ok = std::abs(r_hb - f_hb) <= 1e-6 && std::abs(r_nag - f_nag) <= 1e-6;
  return {ok, fmt("hb radius=%.12f vs %.12f, nag radius=%.12f vs %.12f "
                  "(info: unsquared hb momentum gives %.6f)",
                  r_hb, f_hb, r_nag, f_nag, r_unsq)};
}

// 5. Iterations-to-tolerance dominance on the 3 x 3 grid, both init modes.
Outcome sweep_dominance() {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::kSweep;
  cfg.n_list = {10, 50, 100};
  cfg.m_list = {200, 500, 1000};
  cfg.seed_list = {0, 1, 2, 3, 4};
  cfg.methods = {Method::kGradientDescent, Method::kPolyak, Method::kNesterov};
  cfg.tol = 1e-7;
  bool ok = true;
  int gd_cells = 0, cells = 0;
  for (const InitMode mode : {InitMode::kSpectral, InitMode::kRandom}) {
    cfg.init = mode;
    const SweepResult r = run_sweep(cfg);
    for (const auto& d : r.dominance) {
      ++cells;
      gd_cells += d.gd_converges ? 1 : 0;
      ok = ok && d.ok();
    }
  }
  ok = ok && cells == 18;
  return {ok, fmt("cells=%.0f, GD-converging cells=%.0f, dominance in every GD-converging cell: ",
                  cells, gd_cells) +
                  (ok ? "yes" : "no")};
}

double tail_ratio(const IterationTrace& trace, int count) {
  const auto& rec = trace.records;
  const int k = std::min<int>(count, static_cast<int>(rec.size()) - 1);
  double log_sum = 0.0;
  for (int i = static_cast<int>(rec.size()) - k; i < static_cast<int>(rec.size()); ++i) {
    log_sum += std::log(rec[i].contraction_ratio);
  }
  return std::exp(log_sum / k);
}

// 6. Paired-norm rates and the incoherence display along spectral-init runs.
Outcome paired_norm_rates() {
  ExperimentConfig cfg;
  cfg.schedule.momentum_offset = 0.5;
  const Index n = 64;
  const long m = default_m(n);
  const double inc_limit = 5.0 * std::sqrt(std::log(static_cast<double>(n)));
  bool ok = true;
  double worst_margin = -1.0, worst_inc = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Problem p = make_problem(n, m, seed);
    const Vector x0 = initial_point(p, InitMode::kSpectral, seed);
    for (const Method method :
         {Method::kGradientDescent, Method::kPolyak, Method::kNesterov}) {
      const SolverParams params = params_for(cfg, n, x0.norm(), method);
      const IterationTrace trace = run(p.ens, p.obs, x0, params, p.gt);
      const double ratio = tail_ratio(trace, 50);
      const double bound = method == Method::kGradientDescent
                               ? 1.0 - params.eta / 2.0 + 0.05
                               : 1.0 - std::sqrt(params.eta) / 2.0 + 0.05;
      worst_margin = std::max(worst_margin, ratio - bound);
      ok = ok && trace.status == Status::kConverged && ratio <= bound;
      for (const auto& r : trace.records) {
        worst_inc = std::max(worst_inc, r.max_incoherence);
      }
    }
  }
  ok = ok && worst_inc <= inc_limit;
  return {ok, fmt("max(ratio - bound)=%.4f (<=0), max incoherence=%.4f (<=%.4f)",
                  worst_margin, worst_inc, inc_limit)};
}

// 7. Head-to-head slopes against sqrt(log n).
Outcome slopes() {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::kSlopes;
  cfg.n_list = {16, 64, 256};
  cfg.seed_list = {0, 1, 2, 3, 4};
  cfg.schedule.momentum_offset = 0.5;
  bool ok = true;
  std::ostringstream detail;
  for (const Method accelerated : {Method::kPolyak, Method::kNesterov}) {
    cfg.methods = {Method::kGradientDescent, accelerated};
    const auto rows = compute_slopes(cfg);
    detail << to_string(accelerated) << ":";
    double previous = -1.0;
    for (const auto& r : rows) {
      ok = ok && r.within_band && r.mean_slope >= previous;
      previous = r.mean_slope;
      detail << fmt(" n=%.0f %.3f/%.3f", r.n, r.mean_slope, r.sqrt_log_n);
    }
    detail << ' ';
  }
  return {ok, detail.str() + "(slope/sqrt(log n), band +-30%, monotone)"};
}

// 8. Leave-one-out proximity and row independence.
Outcome leave_one_out() {
  const Index n = 100, m = 256;
  const double threshold = loo_proximity_bound(n);
  ExperimentConfig cfg;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Problem p = make_problem(n, m, seed);
    const Vector x0 = initial_point(p, InitMode::kSpectral, seed);
    for (const Method method : {Method::kPolyak, Method::kNesterov}) {
      SolverParams params = params_for(cfg, n, x0.norm(), method);
      params.max_iters = 500;
      const LooBundle b = loo_run(p.ens, p.obs, x0, params, p.gt);
      worst = std::max(worst, *std::max_element(b.proximity.begin(), b.proximity.end()));
    }
  }
  // Poison row l with NaN: sequence l must not change by a single bit.
  const Problem p = make_problem(n, m, 0);
  const Vector x0 = initial_point(p, InitMode::kSpectral, 0);
  const SolverParams params = params_for(cfg, n, x0.norm(), Method::kNesterov);
  const Index l = 17;
  const auto clean = loo_sequence(p.ens, p.obs, x0, params, l, 100);
  SensingEnsemble poisoned = p.ens;
  poisoned.overwrite_row_for_testing(
      l, Vector::Constant(n, std::numeric_limits<double>::quiet_NaN()));
  const auto dirty = loo_sequence(poisoned, p.obs, x0, params, l, 100);
  bool identical = clean.size() == dirty.size();
  for (std::size_t t = 0; identical && t < clean.size(); ++t) {
    identical = (clean[t].array() == dirty[t].array()).all();
  }
  return {worst <= threshold && identical,
          fmt("max proximity=%.4f (<=%.4f), poisoned sequence identical=%.0f", worst,
              threshold, identical ? 1.0 : 0.0)};
}

// 9. Hessian eigenvalue bounds at sampled RIC points.
Outcome hessian_bounds() {
  const Index n = 64;
  const long m = default_m(n);
  const Problem p = make_problem(n, m, 5);
  const RicConfig cfg;
  const auto points = sample_ric_points(p.ens, p.gt, cfg, 20, 5);
  const double upper = 20.0 * std::log(static_cast<double>(n));
  double lo = 1e300, hi = 0.0;
  for (const auto& x : points) {
    const ExtremeEigenvalues e = hessian_extremes(p.ens, p.obs, x);
    lo = std::min(lo, e.min);
    hi = std::max(hi, e.max);
  }
  return {points.size() == 20 && lo >= 0.45 && hi <= upper,
          fmt("points=%.0f min lambda_min=%.4f (>=0.45) max lambda_max=%.4f (<=%.4f)",
              static_cast<double>(points.size()), lo, hi, upper)};
}

// 10. Row-norm and projection concentration.
Outcome concentration() {
  ExperimentConfig cfg;
  int passed = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SensingEnsemble ens = sample_ensemble(1000, 100, seed);
    const ConcentrationReport r =
        concentration_report(ens, testing::gaussian_vector(100, seed, streams::kProbe));
    passed += r.row_norm_ok && r.projection_ok ? 1 : 0;
  }
  return {passed == 20, fmt("%.0f/20 trials pass both bounds", passed)};
}

// 11. Coded diffraction image recovery.
Outcome coded_diffraction() {
  const GrayImage img = synthetic_image(64, 64);
  const int iters = 140;
  const Index masks = 12;
  std::vector<CdpTrace> traces;
  for (const Method method :
       {Method::kGradientDescent, Method::kPolyak, Method::kNesterov}) {
    traces.push_back(cdp_run(img.pixels, img.height, img.width, masks, method, iters, 0));
  }
  bool ok = true;
  for (const auto& tr : traces) {
    ok = ok && tr.status == Status::kMaxIters && tr.steps == iters &&
         tr.iteration_ffts == 2 * masks * iters;
  }
  const double wf = traces[0].rel_err.back();
  const double hb = traces[1].rel_err.back();
  const double nag = traces[2].rel_err.back();
  ok = ok && hb < wf && nag < wf;
  return {ok, fmt("rel err @140: wf=%.4f polyak=%.4f nesterov=%.4f; ffts/iter=%.0f", wf,
                  hb, nag, static_cast<double>(traces[0].iteration_ffts) / iters)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gradient and Hessian vs finite differences", 1.0, derivatives},
      {2, "spectral init population and Monte-Carlo", 10.0, spectral_population},
      {3, "quadratic rate oracle, kappa=100", 1.0, quadratic_rates},
      {4, "contraction matrix spectral radius", 1.0, contraction_radius},
      {5, "sweep dominance, spectral and random init", 300.0, sweep_dominance},
      {6, "paired-norm rates and incoherence, n=64", 60.0, paired_norm_rates},
      {7, "head-to-head slopes vs sqrt(log n)", 300.0, slopes},
      {8, "leave-one-out proximity and independence", 120.0, leave_one_out},
      {9, "Hessian bounds at RIC points", 60.0, hessian_bounds},
      {10, "concentration bounds, 20 trials", 10.0, concentration},
      {11, "coded diffraction recovery, L=12", 120.0, coded_diffraction},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s | %s | %.2fs (budget %.0fs)\n",
                pass ? "PASS" : "FAIL", c.id, c.name, outcome.detail.c_str(), seconds,
                c.budget_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
