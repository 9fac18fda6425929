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

#include "prbench/ric.hpp"

#include <cmath>

#include "prbench/errors.hpp"

namespace prbench {

void RicConfig::validate() const {
  if (!(C1 > 0.0 && C2 > 0.0 && C3 > 0.0)) {
    throw DomainError("RicConfig: C1, C2, C3 must all be positive");
  }
}

bool check_loc(const Vector& x, const GroundTruth& gt, const RicConfig& cfg) {
  return dist(x, gt.x_star) <= 2.0 * cfg.C1 * gt.norm;
}

double incoherence_bound(Index n, double x_star_norm, const RicConfig& cfg) {
  if (n < 2) throw DomainError("incoherence bound needs n >= 2 (log n > 0)");
  return cfg.C2 * std::sqrt(std::log(static_cast<double>(n))) * x_star_norm;
}

IncoherenceCheck check_inc(const Vector& x, const GroundTruth& gt,
                           const SensingEnsemble& ens, const RicConfig& cfg) {
  if (x.size() != ens.n() || gt.x_star.size() != ens.n()) {
    throw DomainError("check_inc: dimension mismatch");
  }
  const double bound = incoherence_bound(ens.n(), gt.norm, cfg);
  const double s = aligned_sign(x, gt.x_star);
  const Vector diff = x - s * gt.x_star;
  IncoherenceCheck out;
  out.max_incoherence = (ens.rows() * diff).cwiseAbs().maxCoeff();
  out.ok = out.max_incoherence <= bound;
  return out;
}

bool segment_in_ric(const Vector& x_a, const Vector& x_b, const GroundTruth& gt,
                    const SensingEnsemble& ens, const RicConfig& cfg, int samples) {
  if (samples < 2) throw DomainError("segment_in_ric: samples must be >= 2");
  for (int k = 0; k < samples; ++k) {
    const double tau = static_cast<double>(k) / (samples - 1);
    const Vector point = (1.0 - tau) * x_a + tau * x_b;
    if (!check_loc(point, gt, cfg) || !check_inc(point, gt, ens, cfg).ok) {
      return false;
    }
  }
  return true;
}

}  // namespace prbench
