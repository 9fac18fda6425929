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

#ifndef PRBENCH_LOO_HPP
#define PRBENCH_LOO_HPP

#include <vector>

#include "prbench/model.hpp"
#include "prbench/ric.hpp"
#include "prbench/solvers.hpp"

namespace prbench {

struct LooBudget {
  Index max_rows = 256;
  int max_iters = 500;
};

/// The main sequence and its m leave-one-out companions, all started from the
/// same x0 and run for params.max_iters steps without early stopping.
struct LooBundle {
  int steps = 0;
  /// proximity[t] = max_l |(x^t - x^{t,(l)}, x^{t-1} - x^{t-1,(l)})|, with the
  /// cold-start convention x^{-1} = x^0. proximity[0] is 0.
  std::vector<double> proximity;
  /// Per t: for every row i,
  ///   |a_i.(x^t - s x*)| <= |a_i| |x^t - x^{t,(i)}| + 5 sqrt(log n) dist(x^{t,(i)}, x*).
  std::vector<bool> incoherence_via_loo;
  /// Per t: max_l dist(x^{t,(l)}, x*).
  std::vector<double> max_loo_dist;
  /// x^{T,(l)} for every l.
  std::vector<Vector> final_loo_iterates;
  Vector final_iterate;
};

/// Iterates x^{0,(l)}, ..., x^{steps,(l)} of the method run on f^(l). Row l
/// of the ensemble and y[l] are never read.
std::vector<Vector> loo_sequence(const SensingEnsemble& ens, const Observations& obs,
                                 const Vector& x0, const SolverParams& params,
                                 Index left_out, int steps);

/// Throws CapabilityError when m or params.max_iters exceed the budget.
LooBundle loo_run(const SensingEnsemble& ens, const Observations& obs,
                  const Vector& x0, const SolverParams& params,
                  const GroundTruth& gt, const LooBudget& budget = {});

/// C3 sqrt(log n / n).
double loo_proximity_bound(Index n, const RicConfig& cfg = {});

}  // namespace prbench

#endif  // PRBENCH_LOO_HPP
