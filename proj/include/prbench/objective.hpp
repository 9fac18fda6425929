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

#ifndef PRBENCH_OBJECTIVE_HPP
#define PRBENCH_OBJECTIVE_HPP

#include "prbench/model.hpp"

namespace prbench {

// Largest n for which `hessian` materializes the dense matrix.
inline constexpr Index kDenseHessianLimit = 512;

// f(x) = 1/(4m) sum_i ((a_i.x)^2 - y_i)^2.
double cost(const SensingEnsemble& ens, const Observations& obs, const Vector& x);

// (1/m) sum_i ((a_i.x)^2 - y_i) (a_i.x) a_i.
Vector gradient(const SensingEnsemble& ens, const Observations& obs,
                const Vector& x);

// (1/m) sum_i (3 (a_i.x)^2 - y_i) a_i a_i^T. Throws CapabilityError above
// kDenseHessianLimit; use hessian_vec there.
Matrix hessian(const SensingEnsemble& ens, const Observations& obs,
               const Vector& x);

// hessian(x) * v in O(mn) without forming the matrix.
Vector hessian_vec(const SensingEnsemble& ens, const Observations& obs,
                   const Vector& x, const Vector& v);

/// Everything one solver iteration needs from a single pass over the rows.
struct Evaluation {
  double cost = 0.0;
  Vector gradient;
  Vector projections;  // A x
};

Evaluation evaluate(const SensingEnsemble& ens, const Observations& obs,
                    const Vector& x);

/// Gradient of the leave-one-out cost
///   f^(l)(x) = 1/(4m) sum_{i != l} ((a_i.x)^2 - y_i)^2.
/// The normalization keeps the full m. Row `left_out` and y[left_out] are
/// never read.
Vector gradient_excluding(const SensingEnsemble& ens, const Observations& obs,
                          const Vector& x, Index left_out);

}  // namespace prbench

#endif  // PRBENCH_OBJECTIVE_HPP
