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

#ifndef PRBENCH_HARNESS_HPP
#define PRBENCH_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "prbench/config.hpp"
#include "prbench/model.hpp"
#include "prbench/solvers.hpp"

namespace prbench {

/// Seeded instance shared by every experiment: rows from stream rows of
/// `seed`, x_star = sample_unit_sphere(n, seed).
struct Problem {
  SensingEnsemble ens;
  GroundTruth gt;
  Observations obs;
};

Problem make_problem(Index n, Index m, std::uint64_t seed);

/// Spectral (may throw ConvergenceError / DegenerateSpectrumError) or
/// random_init(n, seed, 1).
Vector initial_point(const Problem& problem, InitMode mode, std::uint64_t seed);

/// default_params from the config schedule with eta/beta/tol/max_iters
/// overrides applied.
SolverParams params_for(const ExperimentConfig& cfg, Index n, double norm_x0,
                        Method method);

/// One trace: the columns of cmd_run, then a `# status=` line.
void write_trace_csv(std::ostream& out, const IterationTrace& trace);

/// Least-squares slope of log dist_b(t) against log dist_a(t) over the
/// iterations both traces reach with both errors in [lo, hi]. Empty when
/// fewer than two such pairs exist.
std::optional<double> headtohead_slope(const IterationTrace& a, const IterationTrace& b,
                                       double lo, double hi);

/// Iterations used by a converged trace; +infinity otherwise.
double iterations_to_tol(const IterationTrace& trace);

struct SlopeRow {
  long n = 0;
  long m = 0;
  double mean_slope = 0.0;  // NaN when no seed produced a slope
  int slopes_used = 0;
  double sqrt_log_n = 0.0;
  bool within_band = false;  // |mean_slope / sqrt_log_n - 1| <= 0.3
};

/// Per n in cfg.n_list: methods[0] (reference) vs methods[1] head-to-head
/// slopes averaged over seeds.
std::vector<SlopeRow> compute_slopes(const ExperimentConfig& cfg);

struct SweepCell {
  long n = 0;
  long m = 0;
  Method method = Method::kGradientDescent;
  std::vector<double> iterations;  // per seed; +infinity when not converged
  int diverged = 0;
  int failed = 0;  // initialization failures
  double median = 0.0;
};

struct DominanceRow {
  long n = 0;
  long m = 0;
  bool gd_converges = false;
  bool polyak_faster = false;
  bool nesterov_faster = false;
  bool momentum_agree = false;  // Polyak and Nesterov medians within 10%
  bool ok() const { return !gd_converges || (polyak_faster && nesterov_faster && momentum_agree); }
};

struct SweepResult {
  std::vector<SweepCell> cells;
  std::vector<DominanceRow> dominance;
};

/// Full grid n_list x m_list x methods x seeds with cfg.init. When
/// `trace_dir` is set every run's trace is written there.
SweepResult run_sweep(const ExperimentConfig& cfg,
                      const std::optional<std::string>& trace_dir = std::nullopt);

/// Subcommands. Each writes to cfg.output and returns the process exit code:
/// 0 success, 1 a pass/fail flag in the output is false. I/O problems throw
/// IoError naming the path.
int cmd_run(const ExperimentConfig& cfg);
int cmd_headtohead(const ExperimentConfig& cfg);
int cmd_slopes(const ExperimentConfig& cfg);
int cmd_sweep(const ExperimentConfig& cfg);
int cmd_loo(const ExperimentConfig& cfg);
int cmd_oracle(const ExperimentConfig& cfg);
int cmd_cdp(const ExperimentConfig& cfg);
int cmd_concentration(const ExperimentConfig& cfg);

int dispatch(const ExperimentConfig& cfg);

/// "%.17g".
std::string format_double(double v);

}  // namespace prbench

#endif  // PRBENCH_HARNESS_HPP
