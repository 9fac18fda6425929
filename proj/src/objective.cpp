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

#include "prbench/objective.hpp"

#include <string>

#include "prbench/errors.hpp"

namespace prbench {

namespace {

void check_dims(const SensingEnsemble& ens, const Observations& obs,
                const Vector& x, const char* what) {
  if (obs.y.size() != ens.m() || x.size() != ens.n()) {
    throw DomainError(std::string(what) + ": expected y of length " +
                      std::to_string(ens.m()) + " and x of length " +
                      std::to_string(ens.n()) + ", got " +
                      std::to_string(obs.y.size()) + " and " +
                      std::to_string(x.size()));
  }
}

}  // namespace

Evaluation evaluate(const SensingEnsemble& ens, const Observations& obs,
                    const Vector& x) {
  check_dims(ens, obs, x, "evaluate");
  const double m = static_cast<double>(ens.m());
  Evaluation out;
  out.projections = ens.rows() * x;
  const Vector residual = (out.projections.array().square() - obs.y.array()).matrix();
  out.cost = residual.squaredNorm() / (4.0 * m);
  out.gradient =
      ens.rows().transpose() * (residual.array() * out.projections.array()).matrix();
  out.gradient /= m;
  return out;
}

double cost(const SensingEnsemble& ens, const Observations& obs, const Vector& x) {
  check_dims(ens, obs, x, "cost");
  const Vector proj = ens.rows() * x;
  return (proj.array().square() - obs.y.array()).square().sum() /
         (4.0 * static_cast<double>(ens.m()));
}

Vector gradient(const SensingEnsemble& ens, const Observations& obs,
                const Vector& x) {
  return evaluate(ens, obs, x).gradient;
}

Matrix hessian(const SensingEnsemble& ens, const Observations& obs,
               const Vector& x) {
  check_dims(ens, obs, x, "hessian");
  if (ens.n() > kDenseHessianLimit) {
    throw CapabilityError("hessian: n=" + std::to_string(ens.n()) +
                          " exceeds the dense limit of " +
                          std::to_string(kDenseHessianLimit) +
                          "; use hessian_vec");
  }
  const Vector proj = ens.rows() * x;
  const Vector weights = (3.0 * proj.array().square() - obs.y.array()).matrix();
  Matrix h = ens.rows().transpose() * weights.asDiagonal() * ens.rows();
  h /= static_cast<double>(ens.m());
  return 0.5 * (h + h.transpose());
}

Vector hessian_vec(const SensingEnsemble& ens, const Observations& obs,
                   const Vector& x, const Vector& v) {
  check_dims(ens, obs, x, "hessian_vec");
  if (v.size() != ens.n()) throw DomainError("hessian_vec: v has wrong length");
  const Vector proj = ens.rows() * x;
  const Vector weights = (3.0 * proj.array().square() - obs.y.array()).matrix();
  const Vector av = ens.rows() * v;
  Vector out = ens.rows().transpose() * (weights.array() * av.array()).matrix();
  return out / static_cast<double>(ens.m());
}

Vector gradient_excluding(const SensingEnsemble& ens, const Observations& obs,
                          const Vector& x, Index left_out) {
  check_dims(ens, obs, x, "gradient_excluding");
  if (left_out < 0 || left_out >= ens.m()) {
    throw DomainError("gradient_excluding: row index out of range");
  }
  const Index m = ens.m();
  const Index below = m - left_out - 1;
  Vector g = Vector::Zero(ens.n());
  auto accumulate = [&](const auto& block, const auto& y) {
    const Vector proj = block * x;
    const Vector weights =
        ((proj.array().square() - y.array()) * proj.array()).matrix();
    g.noalias() += block.transpose() * weights;
  };
  if (left_out > 0) {
    accumulate(ens.rows().topRows(left_out), obs.y.head(left_out));
  }
  if (below > 0) {
    accumulate(ens.rows().bottomRows(below), obs.y.tail(below));
  }
  return g / static_cast<double>(m);
}

}  // namespace prbench
