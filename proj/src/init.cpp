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

#include "prbench/init.hpp"

#include <cmath>
#include <string>

#include "prbench/errors.hpp"
#include "prbench/rng.hpp"

namespace prbench {

namespace {

Vector gaussian_draw(Index n, std::uint64_t seed, std::uint64_t stream_id) {
  CounterStream stream(seed, stream_id);
  Vector v(n);
  do {
    for (Index j = 0; j < n; ++j) v(j) = stream.normal();
  } while (v.norm() == 0.0);
  return v;
}

void canonicalize_sign(Vector& v) {
  for (Index j = 0; j < v.size(); ++j) {
    if (v(j) != 0.0) {
      if (v(j) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

SpectralReport spectral_init(const LinearOperator& y_operator, Index n,
                             std::uint64_t seed, double tol, int max_iters) {
  if (n < 1) throw DomainError("spectral_init: n must be >= 1");
  if (!(tol > 0.0)) throw DomainError("spectral_init: tol must be positive");

  PowerIterationResult power = power_iteration(
      y_operator, gaussian_draw(n, seed, streams::kPower), tol, max_iters);
  if (!(power.eigenvalue > 0.0)) {
    throw DegenerateSpectrumError("spectral_init: leading eigenvalue " +
                                  std::to_string(power.eigenvalue) +
                                  " is not positive");
  }
  if (!power.converged) {
    throw ConvergenceError("spectral_init: power iteration did not reach tol " +
                               std::to_string(tol) + " in " +
                               std::to_string(max_iters) +
                               " iterations (residual " +
                               std::to_string(power.residual) + ")",
                           power.residual);
  }

  SpectralReport report;
  Vector v = std::move(power.eigenvector);
  canonicalize_sign(v);
  report.lambda1 = power.eigenvalue;
  report.x0 = std::sqrt(power.eigenvalue / 3.0) * v;
  report.power_iters_used = power.iterations;
  report.residual = power.residual;
  report.rayleigh_quotients = std::move(power.rayleigh_quotients);
  return report;
}

SpectralReport spectral_init(const SensingEnsemble& ens, const Observations& obs,
                             double tol, int max_iters) {
  if (obs.y.size() != ens.m()) {
    throw DomainError("spectral_init: y has length " +
                      std::to_string(obs.y.size()) + ", expected " +
                      std::to_string(ens.m()));
  }
  const double inv_m = 1.0 / static_cast<double>(ens.m());
  LinearOperator y_operator = [&](const Vector& v) -> Vector {
    const Vector proj = ens.rows() * v;
    return inv_m * (ens.rows().transpose() * (obs.y.array() * proj.array()).matrix());
  };
  return spectral_init(y_operator, ens.n(), ens.seed(), tol, max_iters);
}

Vector random_init(Index n, std::uint64_t seed, double radius) {
  if (n < 1) throw DomainError("random_init: n must be >= 1");
  if (!(radius > 0.0)) throw DomainError("random_init: radius must be positive");
  Vector v = gaussian_draw(n, seed, streams::kInit);
  return radius * v / v.norm();
}

}  // namespace prbench
