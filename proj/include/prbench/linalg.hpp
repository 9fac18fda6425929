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

#ifndef PRBENCH_LINALG_HPP
#define PRBENCH_LINALG_HPP

#include <functional>
#include <vector>

#include "prbench/model.hpp"

namespace prbench {

/// A symmetric linear map given only through its action.
using LinearOperator = std::function<Vector(const Vector&)>;

struct PowerIterationResult {
  Vector eigenvector;  // unit norm
  double eigenvalue = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |A v - lambda v|
  bool converged = false;
  std::vector<double> rayleigh_quotients;
};

/// Plain power iteration. Stops once |A v - lambda v| <= tol.
PowerIterationResult power_iteration(const LinearOperator& op, Vector start,
                                     double tol, int max_iters);

struct ExtremeEigenvalues {
  double min = 0.0;
  double max = 0.0;
};

ExtremeEigenvalues extreme_eigenvalues(const Matrix& symmetric);

struct LanczosOptions {
  int max_steps = 200;
  double tol = 1e-8;
  std::uint64_t seed = 0;
};

/// Lanczos with full reorthogonalization for the two ends of the spectrum.
ExtremeEigenvalues extreme_eigenvalues(const LinearOperator& op, Index n,
                                       const LanczosOptions& options = {});

/// Extreme eigenvalues of the phase-retrieval Hessian at x. Dense
/// eigendecomposition up to kDenseHessianLimit, Lanczos on hessian_vec above.
ExtremeEigenvalues hessian_extremes(const SensingEnsemble& ens,
                                    const Observations& obs, const Vector& x);

double spectral_norm(const Matrix& m);
double spectral_radius(const Matrix& m);

}  // namespace prbench

#endif  // PRBENCH_LINALG_HPP
