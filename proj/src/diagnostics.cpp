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

#include "prbench/diagnostics.hpp"

#include <cmath>

#include "prbench/errors.hpp"
#include "prbench/linalg.hpp"
#include "prbench/rng.hpp"

namespace prbench {

namespace {

ContractionReport finish(Matrix m) {
  ContractionReport out;
  out.spectral_norm = spectral_norm(m);
  out.spectral_radius = spectral_radius(m);
  out.matrix = std::move(m);
  return out;
}

void require_square(const Matrix& h, const char* what) {
  if (h.rows() != h.cols() || h.rows() < 1) {
    throw DomainError(std::string(what) + ": Hessian must be square and nonempty");
  }
}

}  // namespace

ContractionReport contraction_matrix_hb(const Matrix& hessian, double eta,
                                        double beta) {
  require_square(hessian, "contraction_matrix_hb");
  const Index n = hessian.rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = (1.0 + beta) * id - eta * hessian;
  m.topRightCorner(n, n) = -beta * id;
  m.bottomLeftCorner(n, n) = id;
  return finish(std::move(m));
}

ContractionReport contraction_matrix_nag(const Matrix& hessian, double eta,
                                         double beta) {
  require_square(hessian, "contraction_matrix_nag");
  const Index n = hessian.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix damped = id - eta * hessian;
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = (1.0 + beta) * damped;
  m.topRightCorner(n, n) = -beta * damped;
  m.bottomLeftCorner(n, n) = id;
  return finish(std::move(m));
}

QuadraticParams quadratic_params(double mu, double L, Method method,
                                 HeavyBallMomentum hb) {
  if (!(mu > 0.0 && mu <= L)) throw DomainError("quadratic_params: need 0 < mu <= L");
  const double sk = std::sqrt(L / mu);
  const double ratio = (sk - 1.0) / (sk + 1.0);
  switch (method) {
    case Method::kGradientDescent: return {1.0 / L, 0.0};
    case Method::kPolyak: {
      const double denom = std::sqrt(mu) + std::sqrt(L);
      const double beta = hb == HeavyBallMomentum::kClassical ? ratio * ratio : ratio;
      return {4.0 / (denom * denom), beta};
    }
    case Method::kNesterov: return {1.0 / L, ratio};
  }
  throw DomainError("quadratic_params: unknown method");
}

double quadratic_oracle(double mu, double L, Method method, int steps,
                        HeavyBallMomentum hb) {
  if (steps < 2) throw DomainError("quadratic_oracle: steps must be >= 2");
  const QuadraticParams p = quadratic_params(mu, L, method, hb);
  const Eigen::Array2d curvature(mu, L);

  Eigen::Array2d curr(1.0, 1.0);
  Eigen::Array2d prev = curr;
  auto paired = [](const Eigen::Array2d& a, const Eigen::Array2d& b) {
    return std::sqrt(a.square().sum() + b.square().sum());
  };

  const int tail_start = steps - steps / 2;
  double log_sum = 0.0;
  for (int k = 1; k <= steps; ++k) {
    const double before = paired(curr, prev);
    const Eigen::Array2d momentum = p.beta * (curr - prev);
    const Eigen::Array2d anchor =
        method == Method::kNesterov ? Eigen::Array2d(curr + momentum) : curr;
    const Eigen::Array2d next = curr - p.eta * curvature * anchor + momentum;
    prev = curr;
    curr = next;
    const double after = paired(curr, prev);
    if (after == 0.0) return 0.0;
    if (k > tail_start) log_sum += std::log(after / before);
    curr /= after;
    prev /= after;
  }
  return std::exp(log_sum / static_cast<double>(steps - tail_start));
}

ConcentrationReport concentration_report(const SensingEnsemble& ens,
                                         const Vector& probe) {
  if (ens.n() < 3) {
    throw DomainError("concentration_report: n must be >= 3");
  }
  if (probe.size() != ens.n()) {
    throw DomainError("concentration_report: probe has wrong length");
  }
  const double n = static_cast<double>(ens.n());
  ConcentrationReport r;
  r.max_row_norm = ens.rows().rowwise().norm().maxCoeff();
  r.row_norm_bound = std::sqrt(6.0 * n);
  r.row_norm_ok = r.max_row_norm <= r.row_norm_bound;
  r.max_projection = (ens.rows() * probe).cwiseAbs().maxCoeff();
  r.projection_bound = 5.0 * std::sqrt(std::log(n)) * probe.norm();
  r.projection_ok = r.max_projection <= r.projection_bound;
  return r;
}

std::vector<Vector> sample_ric_points(const SensingEnsemble& ens,
                                      const GroundTruth& gt, const RicConfig& cfg,
                                      int count, std::uint64_t seed) {
  cfg.validate();
  const Index n = ens.n();
  CounterStream stream(seed, streams::kRicPoints);
  std::vector<Vector> points;
  const int max_attempts = 100 * count + 100;
  for (int attempt = 0; attempt < max_attempts && std::ssize(points) < count;
       ++attempt) {
    Vector u(n);
    for (Index j = 0; j < n; ++j) u(j) = stream.normal();
    if (u.norm() == 0.0) continue;
    const double radius = 2.0 * cfg.C1 * gt.norm * stream.uniform();
    Vector x = gt.x_star + radius * u / u.norm();
    if (check_loc(x, gt, cfg) && check_inc(x, gt, ens, cfg).ok) {
      points.push_back(std::move(x));
    }
  }
  if (std::ssize(points) < count) {
    throw CapabilityError("sample_ric_points: too few points pass INC");
  }
  return points;
}

}  // namespace prbench
