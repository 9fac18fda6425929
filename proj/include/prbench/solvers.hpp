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

#ifndef PRBENCH_SOLVERS_HPP
#define PRBENCH_SOLVERS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prbench/model.hpp"
#include "prbench/ric.hpp"

namespace prbench {

enum class Method { kGradientDescent, kPolyak, kNesterov };

std::string_view to_string(Method method);
/// Accepts "gd", "polyak", "nesterov" (and "hb", "nag" as aliases).
Method parse_method(std::string_view name);

struct SolverParams {
  Method method = Method::kGradientDescent;
  double eta = 0.0;
  double beta = 0.0;
  int max_iters = 10000;
  double tol = 1e-7;
  double divergence_cap = 1e8;

  /// eta > 0, 0 <= beta < 1, beta == 0 for gradient descent.
  void validate() const;
};

/// Constants of the experimental parameter schedule
///   eta  = step_constant / log n / |x0|^2
///   beta = (sqrt(log n) - sqrt(momentum_offset)) /
///          (sqrt(log n) + sqrt(momentum_offset)), clamped at 0.
struct ParamSchedule {
  double step_constant = 0.05;
  double momentum_offset = 2.0;
};

SolverParams default_params(Index n, double norm_x0, Method method,
                            const ParamSchedule& schedule = {});

/// The iterate pair (x^t, x^{t-1}). A cold start has x_curr == x_prev.
struct SolverState {
  Vector x_curr;
  Vector x_prev;
  int t = 0;

  static SolverState cold_start(const Vector& x0);
};

// x+ = x - eta grad f(x)
SolverState step_gd(const SolverState& state, const SensingEnsemble& ens,
                    const Observations& obs, double eta);
// x+ = x - eta grad f(x) + beta (x - x_prev)
SolverState step_polyak(const SolverState& state, const SensingEnsemble& ens,
                        const Observations& obs, double eta, double beta);
// x+ = x - eta grad f(x + beta (x - x_prev)) + beta (x - x_prev)
SolverState step_nesterov(const SolverState& state, const SensingEnsemble& ens,
                          const Observations& obs, double eta, double beta);

SolverState step(const SolverState& state, const SensingEnsemble& ens,
                 const Observations& obs, const SolverParams& params);

/// Point at which the method evaluates the gradient for the next step.
Vector gradient_anchor(const SolverState& state, Method method, double beta);

/// Combines a gradient taken at `gradient_anchor` into the next state.
/// Throws DivergenceError when the new iterate is not finite.
SolverState advance(const SolverState& state, const Vector& grad, double eta,
                    double beta);

enum class Status { kConverged, kMaxIters, kDiverged };
std::string_view to_string(Status status);

/// One row per iteration. Ground-truth columns are NaN (flags false) when the
/// run has no ground truth.
struct IterationRecord {
  int iter = 0;
  double dist = 0.0;  // |x^t - s x_star| with s fixed at t = 0
  double cost = 0.0;
  double grad_norm = 0.0;
  double max_incoherence = 0.0;
  bool loc_ok = false;
  bool inc_ok = false;
  double paired_norm = 0.0;        // |(x^t - s x_star, x^{t-1} - s x_star)|
  double contraction_ratio = 0.0;  // paired_norm(t) / paired_norm(t-1)
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  Status status = Status::kMaxIters;
  Vector final_iterate;
  int sign = 1;
};

/// Iterates until dist <= tol (with ground truth) or |grad f| <= tol
/// (without), max_iters steps, or divergence (cost above divergence_cap or a
/// non-finite iterate). Divergence is reported through the status.
IterationTrace run(const SensingEnsemble& ens, const Observations& obs,
                   const Vector& x0, const SolverParams& params,
                   const std::optional<GroundTruth>& gt = std::nullopt,
                   const RicConfig& ric = {});

}  // namespace prbench

#endif  // PRBENCH_SOLVERS_HPP
