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

#ifndef PRBENCH_DIAGNOSTICS_HPP
#define PRBENCH_DIAGNOSTICS_HPP

#include <cstdint>
#include <vector>

#include "prbench/model.hpp"
#include "prbench/ric.hpp"
#include "prbench/solvers.hpp"

namespace prbench {

/// One-step propagator of the stacked error (x^{t+1} - x*, x^t - x*) for a
/// momentum method whose gradient difference is linearized through `hessian`.
struct ContractionReport {
  Matrix matrix;  // 2n x 2n
  double spectral_norm = 0.0;
  double spectral_radius = 0.0;
};

/// [[(1 + beta) I - eta H, -beta I], [I, 0]]
ContractionReport contraction_matrix_hb(const Matrix& hessian, double eta,
                                        double beta);

/// [[(1 + beta)(I - eta H), -beta (I - eta H)], [I, 0]]
ContractionReport contraction_matrix_nag(const Matrix& hessian, double eta,
                                         double beta);

/// Momentum for heavy ball on a mu-strongly convex, L-smooth quadratic.
///   kClassical: ((sqrt(kappa) - 1) / (sqrt(kappa) + 1))^2, the value for
///               which every mode contracts at (sqrt(L)-sqrt(mu))/(sqrt(L)+sqrt(mu)).
///   kUnsquared: (sqrt(kappa) - 1) / (sqrt(kappa) + 1), which only reaches
///               the square root of that factor.
enum class HeavyBallMomentum { kClassical, kUnsquared };

struct QuadraticParams {
  double eta = 0.0;
  double beta = 0.0;
};

/// Step and momentum for f(x) = (mu x1^2 + L x2^2) / 2:
///   GD: eta = 1/L
///   HB: eta = 4 / (sqrt(mu) + sqrt(L))^2, beta per `hb`
///   NAG: eta = 1/L, beta = (sqrt(kappa) - 1) / (sqrt(kappa) + 1)
QuadraticParams quadratic_params(double mu, double L, Method method,
                                 HeavyBallMomentum hb = HeavyBallMomentum::kClassical);

/// Runs `method` on (mu x1^2 + L x2^2) / 2 from (1, 1) and returns the
/// geometric mean of the per-step paired-norm ratio over the last half of
/// `steps`. The recursion is linear, so the pair is renormalized each step to
/// stay clear of underflow. Returns 0 when the iterates hit the minimizer.
double quadratic_oracle(double mu, double L, Method method, int steps = 10000,
                        HeavyBallMomentum hb = HeavyBallMomentum::kClassical);

struct ConcentrationReport {
  double max_row_norm = 0.0;
  double row_norm_bound = 0.0;  // sqrt(6 n)
  bool row_norm_ok = false;
  double max_projection = 0.0;
  double projection_bound = 0.0;  // 5 sqrt(log n) |probe|
  bool projection_ok = false;
};

/// max_i |a_i| against sqrt(6n), and max_i |a_i . probe| against
/// 5 sqrt(log n) |probe|. The probe must be drawn independently of the
/// ensemble. Throws DomainError for n < 3.
ConcentrationReport concentration_report(const SensingEnsemble& ens,
                                         const Vector& probe);

/// Points x_star + r u with u uniform on the sphere and r uniform on
/// [0, 2 C1 |x_star|), keeping only those that pass check_inc. Drawn from
/// stream (seed, kRicPoints), independent of the ensemble rows.
std::vector<Vector> sample_ric_points(const SensingEnsemble& ens,
                                      const GroundTruth& gt, const RicConfig& cfg,
                                      int count, std::uint64_t seed);

}  // namespace prbench

#endif  // PRBENCH_DIAGNOSTICS_HPP
