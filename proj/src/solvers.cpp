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

#include "prbench/solvers.hpp"

#include <cmath>
#include <limits>

#include "prbench/errors.hpp"
#include "prbench/objective.hpp"

namespace prbench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kGradientDescent: return "gd";
    case Method::kPolyak: return "polyak";
    case Method::kNesterov: return "nesterov";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "gd") return Method::kGradientDescent;
  if (name == "polyak" || name == "hb") return Method::kPolyak;
  if (name == "nesterov" || name == "nag") return Method::kNesterov;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kConverged: return "Converged";
    case Status::kMaxIters: return "MaxIters";
    case Status::kDiverged: return "Diverged";
  }
  return "unknown";
}

void SolverParams::validate() const {
  if (!(eta > 0.0)) throw DomainError("SolverParams: eta must be positive");
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw DomainError("SolverParams: beta must lie in [0, 1)");
  }
  if (method == Method::kGradientDescent && beta != 0.0) {
    throw DomainError("SolverParams: gradient descent requires beta == 0");
  }
  if (max_iters < 0) throw DomainError("SolverParams: max_iters must be >= 0");
  if (!(tol >= 0.0)) throw DomainError("SolverParams: tol must be >= 0");
  if (!(divergence_cap > 0.0)) {
    throw DomainError("SolverParams: divergence_cap must be positive");
  }
}

SolverParams default_params(Index n, double norm_x0, Method method,
                            const ParamSchedule& schedule) {
  if (n < 2) throw DomainError("default_params: n must be >= 2 (log n > 0)");
  if (!(norm_x0 > 0.0)) throw DomainError("default_params: |x0| must be positive");
  const double log_n = std::log(static_cast<double>(n));
  SolverParams p;
  p.method = method;
  p.eta = schedule.step_constant / log_n / (norm_x0 * norm_x0);
  if (method != Method::kGradientDescent) {
    const double a = std::sqrt(log_n);
    const double b = std::sqrt(schedule.momentum_offset);
    p.beta = std::max(0.0, (a - b) / (a + b));
  }
  return p;
}

SolverState SolverState::cold_start(const Vector& x0) {
  return SolverState{x0, x0, 0};
}

Vector gradient_anchor(const SolverState& state, Method method, double beta) {
  if (method == Method::kNesterov) {
    return state.x_curr + beta * (state.x_curr - state.x_prev);
  }
  return state.x_curr;
}

SolverState advance(const SolverState& state, const Vector& grad, double eta,
                    double beta) {
  SolverState next;
  next.x_curr = state.x_curr - eta * grad + beta * (state.x_curr - state.x_prev);
  next.x_prev = state.x_curr;
  next.t = state.t + 1;
  if (!next.x_curr.allFinite()) {
    throw DivergenceError("non-finite iterate at t=" + std::to_string(next.t));
  }
  return next;
}

SolverState step_gd(const SolverState& state, const SensingEnsemble& ens,
                    const Observations& obs, double eta) {
  return advance(state, gradient(ens, obs, state.x_curr), eta, 0.0);
}

SolverState step_polyak(const SolverState& state, const SensingEnsemble& ens,
                        const Observations& obs, double eta, double beta) {
  return advance(state, gradient(ens, obs, state.x_curr), eta, beta);
}

SolverState step_nesterov(const SolverState& state, const SensingEnsemble& ens,
                          const Observations& obs, double eta, double beta) {
  const Vector z = gradient_anchor(state, Method::kNesterov, beta);
  return advance(state, gradient(ens, obs, z), eta, beta);
}

SolverState step(const SolverState& state, const SensingEnsemble& ens,
                 const Observations& obs, const SolverParams& params) {
  switch (params.method) {
    case Method::kGradientDescent: return step_gd(state, ens, obs, params.eta);
    case Method::kPolyak:
      return step_polyak(state, ens, obs, params.eta, params.beta);
    case Method::kNesterov:
      return step_nesterov(state, ens, obs, params.eta, params.beta);
  }
  throw DomainError("step: unknown method");
}

IterationTrace run(const SensingEnsemble& ens, const Observations& obs,
                   const Vector& x0, const SolverParams& params,
                   const std::optional<GroundTruth>& gt, const RicConfig& ric) {
  params.validate();
  if (x0.size() != ens.n() || obs.y.size() != ens.m()) {
    throw DomainError("run: dimension mismatch");
  }
  if (gt && gt->x_star.size() != ens.n()) {
    throw DomainError("run: ground truth has wrong length");
  }

  IterationTrace trace;
  Vector target;         // s * x_star
  Vector target_proj;    // A (s * x_star)
  double inc_bound = kNaN;
  if (gt) {
    trace.sign = aligned_sign(x0, gt->x_star);
    target = trace.sign * gt->x_star;
    target_proj = ens.rows() * target;
    if (ens.n() >= 2) inc_bound = incoherence_bound(ens.n(), gt->norm, ric);
  }

  SolverState state = SolverState::cold_start(x0);
  double prev_paired = kNaN;
  while (true) {
    const Evaluation eval = evaluate(ens, obs, state.x_curr);
    IterationRecord rec;
    rec.iter = state.t;
    rec.cost = eval.cost;
    rec.grad_norm = eval.gradient.norm();
    if (gt) {
      const double d_curr = (state.x_curr - target).norm();
      const double d_prev = (state.x_prev - target).norm();
      rec.dist = d_curr;
      rec.max_incoherence = (eval.projections - target_proj).cwiseAbs().maxCoeff();
      rec.loc_ok = d_curr <= 2.0 * ric.C1 * gt->norm;
      rec.inc_ok = rec.max_incoherence <= inc_bound;
      rec.paired_norm = std::hypot(d_curr, d_prev);
      rec.contraction_ratio =
          prev_paired > 0.0 ? rec.paired_norm / prev_paired : kNaN;
      prev_paired = rec.paired_norm;
    } else {
      rec.dist = rec.max_incoherence = rec.paired_norm = rec.contraction_ratio = kNaN;
    }
    trace.records.push_back(rec);

    if (!std::isfinite(eval.cost) || eval.cost > params.divergence_cap) {
      trace.status = Status::kDiverged;
      break;
    }
    const double criterion = gt ? rec.dist : rec.grad_norm;
    if (criterion <= params.tol) {
      trace.status = Status::kConverged;
      break;
    }
    if (state.t >= params.max_iters) {
      trace.status = Status::kMaxIters;
      break;
    }

    try {
      if (params.method == Method::kNesterov) {
        const Vector z = gradient_anchor(state, params.method, params.beta);
        state = advance(state, gradient(ens, obs, z), params.eta, params.beta);
      } else {
        state = advance(state, eval.gradient, params.eta, params.beta);
      }
    } catch (const DivergenceError&) {
      trace.status = Status::kDiverged;
      state.x_curr.setConstant(kNaN);
      break;
    }
  }
  trace.final_iterate = state.x_curr;
  return trace;
}

}  // namespace prbench
