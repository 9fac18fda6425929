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

#include "prbench/model.hpp"

#include <string>

#include "prbench/errors.hpp"
#include "prbench/rng.hpp"

namespace prbench {

namespace {

void require_same_length(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw DomainError(std::string(what) + ": length mismatch (" +
                      std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
  }
}

}  // namespace

SensingEnsemble::SensingEnsemble(Matrix rows, std::uint64_t seed)
    : rows_(std::move(rows)), seed_(seed) {
  if (rows_.rows() < 1 || rows_.cols() < 1) {
    throw DomainError("SensingEnsemble: need m >= 1 and n >= 1");
  }
  if (!rows_.allFinite()) {
    throw DomainError("SensingEnsemble: non-finite entry");
  }
}

void SensingEnsemble::overwrite_row_for_testing(Index i, const Vector& row) {
  rows_.row(i) = row.transpose();
}

GroundTruth::GroundTruth(Vector x) : x_star(std::move(x)), norm(x_star.norm()) {
  if (x_star.size() < 1) throw DomainError("GroundTruth: empty vector");
}

Observations::Observations(Vector values) : y(std::move(values)) {
  if ((y.array() < 0.0).any() || !y.allFinite()) {
    throw DomainError("Observations: entries must be finite and nonnegative");
  }
}

SensingEnsemble sample_ensemble(Index m, Index n, std::uint64_t seed) {
  if (m < 1 || n < 1) {
    throw DomainError("sample_ensemble: need m >= 1 and n >= 1, got m=" +
                      std::to_string(m) + " n=" + std::to_string(n));
  }
  Matrix rows(m, n);
  for (Index i = 0; i < m; ++i) {
    CounterStream stream(seed, static_cast<std::uint64_t>(i));
    for (Index j = 0; j < n; ++j) rows(i, j) = stream.normal();
  }
  return SensingEnsemble(std::move(rows), seed);
}

Observations observe(const SensingEnsemble& ens, const GroundTruth& gt) {
  if (ens.n() != gt.x_star.size()) {
    throw DomainError("observe: ensemble has n=" + std::to_string(ens.n()) +
                      " but x_star has length " +
                      std::to_string(gt.x_star.size()));
  }
  Vector proj = ens.rows() * gt.x_star;
  return Observations(proj.array().square().matrix());
}

double dist(const Vector& x, const Vector& x_star) {
  require_same_length(x, x_star, "dist");
  return std::min((x - x_star).norm(), (x + x_star).norm());
}

int aligned_sign(const Vector& x, const Vector& x_star) {
  require_same_length(x, x_star, "aligned_sign");
  return (x + x_star).norm() < (x - x_star).norm() ? -1 : 1;
}

Vector sample_unit_sphere(Index n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_unit_sphere: n must be >= 1");
  CounterStream stream(seed, streams::kSphere);
  Vector v(n);
  // A zero draw has probability zero but would make normalization undefined.
  do {
    for (Index j = 0; j < n; ++j) v(j) = stream.normal();
  } while (v.norm() == 0.0);
  return v / v.norm();
}

GroundTruth unit_ground_truth(Index n, std::uint64_t seed) {
  return GroundTruth(sample_unit_sphere(n, seed));
}

}  // namespace prbench
