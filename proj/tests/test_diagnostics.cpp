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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "prbench/config.hpp"
#include "prbench/diagnostics.hpp"
#include "prbench/errors.hpp"
#include "prbench/harness.hpp"
#include "prbench/linalg.hpp"
#include "prbench/ric.hpp"

namespace prbench {
namespace {

Matrix diag2(double a, double b) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = a;
  h(1, 1) = b;
  return h;
}

// Eigenvalues of the HB companion matrix for one curvature h are the roots of
// z^2 - (1 + beta - eta h) z + beta; NAG replaces that with
// z^2 - (1 + beta)(1 - eta h) z + beta (1 - eta h).
double max_root(double b, double c) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) return std::sqrt(c);
  return std::max(std::abs((b + std::sqrt(disc)) / 2.0), std::abs((b - std::sqrt(disc)) / 2.0));
}

TEST(ContractionHb, BlockLayout) {
  const double L = 4.0;
  const ContractionReport r = contraction_matrix_hb(L * Matrix::Identity(3, 3), 1.0 / L, 0.0);
  EXPECT_LT(r.matrix.topLeftCorner(3, 3).norm(), 1e-15);
  EXPECT_TRUE(r.matrix.bottomLeftCorner(3, 3).isIdentity());
  EXPECT_NEAR(r.spectral_norm, 1.0, 1e-12);
}

TEST(ContractionHb, QuadraticRadiusMatchesRoots) {
  const double mu = 1.0, L = 100.0;
  const QuadraticParams p = quadratic_params(mu, L, Method::kPolyak);
  const ContractionReport r = contraction_matrix_hb(diag2(mu, L), p.eta, p.beta);
  const double oracle = std::max(max_root(1.0 + p.beta - p.eta * mu, p.beta),
                                 max_root(1.0 + p.beta - p.eta * L, p.beta));
  // Double roots: eigenvalues of the defective block resolve to ~sqrt(eps).
  EXPECT_NEAR(r.spectral_radius, oracle, 1e-7);
  const double sk = std::sqrt(L / mu);
  EXPECT_LE(r.spectral_radius, (sk - 1.0) / (sk + 1.0) + 1e-6);
}

TEST(ContractionHb, ZeroMomentumEigenvalues) {
  const double mu = 1.0, L = 10.0;
  const ContractionReport r = contraction_matrix_hb(diag2(mu, L), 1.0 / L, 0.0);
  Eigen::EigenSolver<Matrix> es(r.matrix);
  std::vector<double> mags;
  for (Index i = 0; i < 4; ++i) mags.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(mags.begin(), mags.end());
  EXPECT_NEAR(mags[3], 1.0 - mu / L, 1e-12);
  EXPECT_NEAR(mags[2], 0.0, 1e-12);
  EXPECT_NEAR(r.spectral_radius, 1.0 - mu / L, 1e-12);
}

TEST(ContractionHb, UnsquaredMomentumGivesSlowerRadius) {
  // With the unsquared momentum the complex-root modulus is sqrt(beta).
  const QuadraticParams p =
      quadratic_params(1.0, 100.0, Method::kPolyak, HeavyBallMomentum::kUnsquared);
  EXPECT_NEAR(p.beta, 9.0 / 11.0, 1e-15);
  const ContractionReport r = contraction_matrix_hb(diag2(1.0, 100.0), p.eta, p.beta);
  EXPECT_NEAR(r.spectral_radius, std::sqrt(9.0 / 11.0), 1e-9);
  EXPECT_NEAR(quadratic_oracle(1.0, 100.0, Method::kPolyak, 10000,
                               HeavyBallMomentum::kUnsquared),
              std::sqrt(9.0 / 11.0), 2e-3);
}

TEST(ContractionNag, ZeroMomentumMatchesHb) {
  const Matrix h = diag2(2.0, 7.0);
  const ContractionReport a = contraction_matrix_nag(h, 0.1, 0.0);
  const ContractionReport b = contraction_matrix_hb(h, 0.1, 0.0);
  EXPECT_LT((a.matrix - b.matrix).norm(), 1e-15);
}

TEST(ContractionNag, QuadraticRadius) {
  const double mu = 1.0, L = 100.0;
  const QuadraticParams p = quadratic_params(mu, L, Method::kNesterov);
  const ContractionReport r = contraction_matrix_nag(diag2(mu, L), p.eta, p.beta);
  EXPECT_LE(r.spectral_radius, 1.0 - std::sqrt(mu / L) + 1e-6);
  const double q = 1.0 - p.eta * mu;
  EXPECT_NEAR(r.spectral_radius, max_root((1.0 + p.beta) * q, p.beta * q), 1e-6);
}

TEST(ContractionNag, InverseStepHessianKillsUpperBlocks) {
  const double eta = 0.25;
  const ContractionReport r =
      contraction_matrix_nag((1.0 / eta) * Matrix::Identity(2, 2), eta, 0.6);
  EXPECT_LT(r.matrix.topRows(2).norm(), 1e-15);
  EXPECT_NEAR(r.spectral_norm, 1.0, 1e-12);
}

TEST(QuadraticOracle, Cases) {
  EXPECT_EQ(quadratic_oracle(3.0, 3.0, Method::kGradientDescent), 0.0);
  EXPECT_NEAR(quadratic_oracle(1.0, 100.0, Method::kGradientDescent), 0.99, 0.005);
  EXPECT_LE(quadratic_oracle(1.0, 100.0, Method::kPolyak), 9.0 / 11.0 + 0.02);
  EXPECT_LE(quadratic_oracle(1.0, 100.0, Method::kNesterov), 0.92);
  EXPECT_THROW(quadratic_oracle(2.0, 1.0, Method::kPolyak), DomainError);
}

TEST(Concentration, Bounds) {
  const SensingEnsemble ens = sample_ensemble(1000, 100, 0);
  const ConcentrationReport zero = concentration_report(ens, Vector::Zero(100));
  EXPECT_TRUE(zero.projection_ok);
  EXPECT_EQ(zero.max_projection, 0.0);
  EXPECT_NEAR(zero.row_norm_bound, std::sqrt(600.0), 1e-12);
  EXPECT_TRUE(zero.row_norm_ok);
  const ConcentrationReport unit = concentration_report(ens, Vector::Unit(100, 0));
  EXPECT_NEAR(unit.max_projection, ens.rows().col(0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(concentration_report(sample_ensemble(10, 2, 0), Vector::Ones(2)),
               DomainError);
}

TEST(RicPoints, InsideRicAndHessianWellConditioned) {
  const Index n = 32;
  const Problem p = make_problem(n, default_m(n), 1);
  const RicConfig cfg;
  const auto points = sample_ric_points(p.ens, p.gt, cfg, 5, 1);
  ASSERT_EQ(points.size(), 5u);
  for (const auto& x : points) {
    EXPECT_TRUE(check_loc(x, p.gt, cfg));
    EXPECT_TRUE(check_inc(x, p.gt, p.ens, cfg).ok);
    const ExtremeEigenvalues e = hessian_extremes(p.ens, p.obs, x);
    EXPECT_GT(e.min, 0.0);
  }
}

}  // namespace
}  // namespace prbench
