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

#include "prbench/errors.hpp"
#include "prbench/objective.hpp"
#include "test_util.hpp"

namespace prbench {
namespace {

struct Fixture {
  SensingEnsemble ens = sample_ensemble(60, 20, 4);
  GroundTruth gt = unit_ground_truth(20, 4);
  Observations obs = observe(ens, gt);
};

TEST(Objective, ZeroAtGroundTruth) {
  Fixture f;
  EXPECT_NEAR(cost(f.ens, f.obs, f.gt.x_star), 0.0, 1e-28);
  EXPECT_LT(gradient(f.ens, f.obs, f.gt.x_star).norm(), 1e-14);
  EXPECT_LT(gradient(f.ens, f.obs, -f.gt.x_star).norm(), 1e-14);
}

TEST(Objective, CostMatchesDirectSum) {
  Fixture f;
  const Vector x = testing::gaussian_vector(20, 1, streams::kProbe);
  double sum = 0.0;
  for (Index i = 0; i < f.ens.m(); ++i) {
    const double p = f.ens.rows().row(i).dot(x);
    sum += (p * p - f.obs.y(i)) * (p * p - f.obs.y(i));
  }
  EXPECT_NEAR(cost(f.ens, f.obs, x), sum / (4.0 * 60.0), 1e-12 * sum);
}

TEST(Objective, GradientMatchesFiniteDifferences) {
  Fixture f;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const Vector x = testing::gaussian_vector(20, k, streams::kProbe);
    const Vector fd = testing::fd_gradient(
        [&](const Vector& v) { return cost(f.ens, f.obs, v); }, x, 1e-5);
    EXPECT_LT((gradient(f.ens, f.obs, x) - fd).norm() / fd.norm(), 1e-6);
  }
}

TEST(Objective, HessianMatchesFiniteDifferences) {
  Fixture f;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const Vector x = testing::gaussian_vector(20, k, streams::kProbe);
    const Matrix fd = testing::fd_jacobian(
        [&](const Vector& v) { return gradient(f.ens, f.obs, v); }, x, 1e-5);
    const Matrix H = hessian(f.ens, f.obs, x);
    EXPECT_LT((H - fd).norm() / fd.norm(), 1e-5);
    EXPECT_LT((H - H.transpose()).norm(), 1e-12 * H.norm());
  }
}

TEST(Objective, HessianVecMatchesDense) {
  Fixture f;
  const Vector x = testing::gaussian_vector(20, 8, streams::kProbe);
  const Vector v = testing::gaussian_vector(20, 9, streams::kProbe);
  const Vector dense = hessian(f.ens, f.obs, x) * v;
  EXPECT_LT((hessian_vec(f.ens, f.obs, x, v) - dense).norm(), 1e-12 * dense.norm());
}

TEST(Objective, HessianRefusesLargeDimensions) {
  const SensingEnsemble ens = sample_ensemble(2, kDenseHessianLimit + 1, 0);
  const Observations obs(Vector::Ones(2));
  EXPECT_THROW(hessian(ens, obs, Vector::Ones(kDenseHessianLimit + 1)), CapabilityError);
}

TEST(Objective, EvaluateConsistent) {
  Fixture f;
  const Vector x = testing::gaussian_vector(20, 2, streams::kProbe);
  const Evaluation e = evaluate(f.ens, f.obs, x);
  EXPECT_DOUBLE_EQ(e.cost, cost(f.ens, f.obs, x));
  EXPECT_LT((e.gradient - gradient(f.ens, f.obs, x)).norm(), 1e-13);
  EXPECT_LT((e.projections - f.ens.rows() * x).norm(), 1e-12);
}

TEST(Objective, DimensionMismatch) {
  Fixture f;
  EXPECT_THROW(cost(f.ens, f.obs, Vector::Ones(3)), DomainError);
  EXPECT_THROW(gradient(f.ens, f.obs, Vector::Ones(3)), DomainError);
}

// Independent route: the leave-one-out gradient with 1/m normalization equals
// (m-1)/m times the full gradient of the ensemble with row l deleted.
TEST(GradientExcluding, MatchesReducedEnsemble) {
  Fixture f;
  const Vector x = testing::gaussian_vector(20, 5, streams::kProbe);
  for (Index l : {Index{0}, Index{17}, Index{59}}) {
    Matrix rows(59, 20);
    Vector y(59);
    for (Index i = 0, r = 0; i < 60; ++i) {
      if (i == l) continue;
      rows.row(r) = f.ens.rows().row(i);
      y(r++) = f.obs.y(i);
    }
    const SensingEnsemble reduced(rows);
    const Vector expected = gradient(reduced, Observations(y), x) * (59.0 / 60.0);
    EXPECT_LT((gradient_excluding(f.ens, f.obs, x, l) - expected).norm(),
              1e-12 * expected.norm());
  }
  EXPECT_THROW(gradient_excluding(f.ens, f.obs, x, 60), DomainError);
}

}  // namespace
}  // namespace prbench
