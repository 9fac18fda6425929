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

#ifndef PRBENCH_RIC_HPP
#define PRBENCH_RIC_HPP

#include "prbench/model.hpp"

namespace prbench {

/// Constants of the region of incoherence and contraction.
///   locality:    |x - s x_star| <= 2 C1 |x_star|
///   incoherence: max_i |a_i.(x - s x_star)| <= C2 sqrt(log n) |x_star|
///   leave-one-out proximity threshold: C3 sqrt(log n / n)
/// s is the sign aligning x with x_star.
struct RicConfig {
  double C1 = 0.3;
  double C2 = 5.0;
  double C3 = 5.0;

  void validate() const;
};

/// Inclusive: the boundary counts as inside.
bool check_loc(const Vector& x, const GroundTruth& gt, const RicConfig& cfg = {});

struct IncoherenceCheck {
  bool ok = false;
  double max_incoherence = 0.0;
};

/// Throws DomainError for n < 2.
IncoherenceCheck check_inc(const Vector& x, const GroundTruth& gt,
                           const SensingEnsemble& ens, const RicConfig& cfg = {});

/// C2 sqrt(log n) |x_star|.
double incoherence_bound(Index n, double x_star_norm, const RicConfig& cfg);

/// LOC and INC at `samples` evenly spaced points of [x_a, x_b], endpoints
/// included. Nesterov callers pass x^t + beta (x^t - x^{t-1}) as an endpoint.
bool segment_in_ric(const Vector& x_a, const Vector& x_b, const GroundTruth& gt,
                    const SensingEnsemble& ens, const RicConfig& cfg = {},
                    int samples = 16);

}  // namespace prbench

#endif  // PRBENCH_RIC_HPP
