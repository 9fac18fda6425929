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

#ifndef PRBENCH_INIT_HPP
#define PRBENCH_INIT_HPP

#include <cstdint>
#include <vector>

#include "prbench/linalg.hpp"
#include "prbench/model.hpp"

namespace prbench {

inline constexpr double kSpectralTol = 1e-10;
inline constexpr int kSpectralMaxIters = 1000;

struct SpectralReport {
  Vector x0;
  double lambda1 = 0.0;
  int power_iters_used = 0;
  double residual = 0.0;  // |Y v - lambda1 v| at the returned eigenvector
  std::vector<double> rayleigh_quotients;
};

/// Spectral initializer x0 = sqrt(lambda1(Y) / 3) v for
/// Y = (1/m) sum_i y_i a_i a_i^T, with Y applied matrix-free.
///
/// The power iteration starts from a Gaussian draw of stream
/// (ens.seed(), streams::kPower) and stops when |Y v - lambda v| <= tol.
/// The eigenvector's first nonzero component is made positive.
SpectralReport spectral_init(const SensingEnsemble& ens, const Observations& obs,
                             double tol = kSpectralTol,
                             int max_iters = kSpectralMaxIters);

/// Same initializer for an arbitrary symmetric PSD operator standing in for Y.
SpectralReport spectral_init(const LinearOperator& y_operator, Index n,
                             std::uint64_t seed, double tol = kSpectralTol,
                             int max_iters = kSpectralMaxIters);

/// radius * (uniform draw on the unit sphere), from stream (seed, kInit).
Vector random_init(Index n, std::uint64_t seed, double radius = 1.0);

}  // namespace prbench

#endif  // PRBENCH_INIT_HPP
