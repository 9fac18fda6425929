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

#ifndef PRBENCH_MODEL_HPP
#define PRBENCH_MODEL_HPP

#include <Eigen/Core>
#include <cstdint>

namespace prbench {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// The m x n matrix whose rows are the sensing vectors a_i.
///
/// Entries of row i are the first n standard normals of stream (seed, i), so
/// any row can be regenerated independently and the whole matrix is a pure
/// function of (m, n, seed).
class SensingEnsemble {
 public:
  /// Wraps explicit rows; used for hand-built examples and for tests that
  /// poison individual rows. All entries must be finite.
  explicit SensingEnsemble(Matrix rows, std::uint64_t seed = 0);

  const Matrix& rows() const { return rows_; }
  Index m() const { return rows_.rows(); }
  Index n() const { return rows_.cols(); }
  std::uint64_t seed() const { return seed_; }

  /// Unchecked replacement of a row. Only tests use this, to prove that a
  /// leave-one-out sequence never reads the row it leaves out.
  void overwrite_row_for_testing(Index i, const Vector& row);

 private:
  Matrix rows_;
  std::uint64_t seed_;
};

struct GroundTruth {
  explicit GroundTruth(Vector x);

  Vector x_star;
  double norm;
};

struct Observations {
  explicit Observations(Vector values);

  Vector y;
};

SensingEnsemble sample_ensemble(Index m, Index n, std::uint64_t seed);

/// y_i = (a_i . x_star)^2, noiseless.
Observations observe(const SensingEnsemble& ens, const GroundTruth& gt);

/// min(|x - x_star|, |x + x_star|).
double dist(const Vector& x, const Vector& x_star);

/// The sign s in {+1, -1} minimizing |x - s x_star|; ties resolve to +1.
int aligned_sign(const Vector& x, const Vector& x_star);

/// Normalized Gaussian draw from stream (seed, streams::kSphere).
Vector sample_unit_sphere(Index n, std::uint64_t seed);

/// Unit-norm ground truth drawn with `sample_unit_sphere`.
GroundTruth unit_ground_truth(Index n, std::uint64_t seed);

}  // namespace prbench

#endif  // PRBENCH_MODEL_HPP
