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

#include "prbench/loo.hpp"

#include <cmath>
#include <string>

#include "prbench/errors.hpp"
#include "prbench/objective.hpp"
#include "prbench/parallel.hpp"

namespace prbench {

namespace {

SolverState loo_step(const SolverState& state, const SensingEnsemble& ens,
                     const Observations& obs, const SolverParams& params,
                     Index left_out) {
  const Vector anchor = gradient_anchor(state, params.method, params.beta);
  return advance(state, gradient_excluding(ens, obs, anchor, left_out), params.eta,
                 params.beta);
}

}  // namespace

double loo_proximity_bound(Index n, const RicConfig& cfg) {
  if (n < 2) throw DomainError("loo_proximity_bound: n must be >= 2");
  const double nd = static_cast<double>(n);
  return cfg.C3 * std::sqrt(std::log(nd) / nd);
}

std::vector<Vector> loo_sequence(const SensingEnsemble& ens, const Observations& obs,
                                 const Vector& x0, const SolverParams& params,
                                 Index left_out, int steps) {
  params.validate();
  if (steps < 0) throw DomainError("loo_sequence: steps must be >= 0");
  std::vector<Vector> iterates;
  iterates.reserve(static_cast<std::size_t>(steps) + 1);
  SolverState state = SolverState::cold_start(x0);
  iterates.push_back(state.x_curr);
  for (int t = 0; t < steps; ++t) {
    state = loo_step(state, ens, obs, params, left_out);
    iterates.push_back(state.x_curr);
  }
  return iterates;
}

LooBundle loo_run(const SensingEnsemble& ens, const Observations& obs,
                  const Vector& x0, const SolverParams& params,
                  const GroundTruth& gt, const LooBudget& budget) {
  params.validate();
  if (ens.m() > budget.max_rows || params.max_iters > budget.max_iters) {
    throw CapabilityError("loo_run: m=" + std::to_string(ens.m()) +
                          " iters=" + std::to_string(params.max_iters) +
                          " exceeds the budget (m <= " +
                          std::to_string(budget.max_rows) + ", iters <= " +
                          std::to_string(budget.max_iters) + ")");
  }
  if (x0.size() != ens.n() || gt.x_star.size() != ens.n()) {
    throw DomainError("loo_run: dimension mismatch");
  }
  const int steps = params.max_iters;
  const Index m = ens.m();
  const auto T = static_cast<std::size_t>(steps) + 1;

  // Main sequence: iterates and their projections onto every row.
  std::vector<Vector> main_iterates;
  main_iterates.reserve(T);
  SolverState state = SolverState::cold_start(x0);
  main_iterates.push_back(state.x_curr);
  for (int t = 0; t < steps; ++t) {
    state = step(state, ens, obs, params);
    main_iterates.push_back(state.x_curr);
  }
  const int sign = aligned_sign(x0, gt.x_star);
  const Vector target_proj = ens.rows() * (sign * gt.x_star);
  const Vector row_norms = ens.rows().rowwise().norm();
  const double proj_const = 5.0 * std::sqrt(std::log(static_cast<double>(ens.n())));

  // Per (l, t) results, written only by the worker that owns l.
  std::vector<std::vector<double>> pair_gap(static_cast<std::size_t>(m));
  std::vector<std::vector<double>> loo_dist(static_cast<std::size_t>(m));
  std::vector<std::vector<char>> bound_ok(static_cast<std::size_t>(m));
  std::vector<Vector> finals(static_cast<std::size_t>(m));

  parallel_for(static_cast<std::size_t>(m), [&](std::size_t l) {
    const auto left_out = static_cast<Index>(l);
    auto& gap = pair_gap[l];
    auto& dists = loo_dist[l];
    auto& ok = bound_ok[l];
    gap.resize(T);
    dists.resize(T);
    ok.resize(T);
    SolverState s = SolverState::cold_start(x0);
    for (std::size_t t = 0; t < T; ++t) {
      if (t > 0) s = loo_step(s, ens, obs, params, left_out);
      const Vector& main_curr = main_iterates[t];
      const Vector& main_prev = main_iterates[t == 0 ? 0 : t - 1];
      const double d_curr = (main_curr - s.x_curr).norm();
      gap[t] = std::hypot(d_curr, (main_prev - s.x_prev).norm());
      dists[t] = dist(s.x_curr, gt.x_star);
      const double lhs =
          std::abs(ens.rows().row(left_out).dot(main_curr) - target_proj(left_out));
      const double rhs = row_norms(left_out) * d_curr + proj_const * dists[t];
      ok[t] = lhs <= rhs ? 1 : 0;
    }
    finals[l] = s.x_curr;
  });

  LooBundle bundle;
  bundle.steps = steps;
  bundle.proximity.assign(T, 0.0);
  bundle.max_loo_dist.assign(T, 0.0);
  bundle.incoherence_via_loo.assign(T, true);
  for (std::size_t l = 0; l < static_cast<std::size_t>(m); ++l) {
    for (std::size_t t = 0; t < T; ++t) {
      bundle.proximity[t] = std::max(bundle.proximity[t], pair_gap[l][t]);
      bundle.max_loo_dist[t] = std::max(bundle.max_loo_dist[t], loo_dist[l][t]);
      if (!bound_ok[l][t]) bundle.incoherence_via_loo[t] = false;
    }
  }
  bundle.final_loo_iterates = std::move(finals);
  bundle.final_iterate = main_iterates.back();
  return bundle;
}

}  // namespace prbench
