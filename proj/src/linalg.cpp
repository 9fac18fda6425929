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

#include "prbench/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "prbench/errors.hpp"
#include "prbench/objective.hpp"
#include "prbench/rng.hpp"

namespace prbench {

PowerIterationResult power_iteration(const LinearOperator& op, Vector start,
                                     double tol, int max_iters) {
  if (!(tol > 0.0)) throw DomainError("power_iteration: tol must be positive");
  if (max_iters < 1) throw DomainError("power_iteration: max_iters must be >= 1");
  const double start_norm = start.norm();
  if (!(start_norm > 0.0)) throw DomainError("power_iteration: zero start vector");

  PowerIterationResult out;
  Vector v = start / start_norm;
  for (int k = 1; k <= max_iters; ++k) {
    const Vector w = op(v);
    const double lambda = v.dot(w);
    const double residual = (w - lambda * v).norm();
    out.rayleigh_quotients.push_back(lambda);
    out.iterations = k;
    out.eigenvalue = lambda;
    out.residual = residual;
    out.eigenvector = v;
    if (residual <= tol) {
      out.converged = true;
      return out;
    }
    const double wn = w.norm();
    if (!(wn > 0.0)) return out;  // v is in the null space; caller decides
    v = w / wn;
  }
  return out;
}

ExtremeEigenvalues extreme_eigenvalues(const Matrix& symmetric) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("extreme_eigenvalues: eigensolver failed", NAN);
  }
  const auto& ev = solver.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

ExtremeEigenvalues extreme_eigenvalues(const LinearOperator& op, Index n,
                                       const LanczosOptions& options) {
  if (n < 1) throw DomainError("extreme_eigenvalues: n must be >= 1");
  const int steps_cap = static_cast<int>(std::min<Index>(options.max_steps, n));

  CounterStream stream(options.seed, streams::kPower);
  Vector q(n);
  for (Index j = 0; j < n; ++j) q(j) = stream.normal();
  q.normalize();

  Matrix basis(n, steps_cap);
  std::vector<double> alpha, beta;
  ExtremeEigenvalues last{};
  for (int k = 0; k < steps_cap; ++k) {
    basis.col(k) = q;
    Vector w = op(q);
    const double a = q.dot(w);
    alpha.push_back(a);
    // Full reorthogonalization, applied twice.
    for (int pass = 0; pass < 2; ++pass) {
      w -= basis.leftCols(k + 1) * (basis.leftCols(k + 1).transpose() * w);
    }
    const double b = w.norm();

    const int size = k + 1;
    Matrix tri = Matrix::Zero(size, size);
    for (int i = 0; i < size; ++i) tri(i, i) = alpha[i];
    for (int i = 0; i + 1 < size; ++i) tri(i, i + 1) = tri(i + 1, i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Matrix> solver(tri);
    const auto& theta = solver.eigenvalues();
    const auto& s = solver.eigenvectors();
    last = {theta(0), theta(size - 1)};
    const double scale = std::max({1.0, std::abs(last.min), std::abs(last.max)});
    const double res_min = std::abs(b * s(size - 1, 0));
    const double res_max = std::abs(b * s(size - 1, size - 1));
    if (std::max(res_min, res_max) <= options.tol * scale || b <= 1e-14 * scale) {
      return last;
    }
    beta.push_back(b);
    q = w / b;
  }
  if (steps_cap == n) return last;  // Krylov space is the whole space
  throw ConvergenceError("extreme_eigenvalues: Lanczos did not converge",
                         NAN);
}

ExtremeEigenvalues hessian_extremes(const SensingEnsemble& ens,
                                    const Observations& obs, const Vector& x) {
  if (ens.n() <= kDenseHessianLimit) {
    return extreme_eigenvalues(hessian(ens, obs, x));
  }
  LinearOperator op = [&](const Vector& v) { return hessian_vec(ens, obs, x, v); };
  return extreme_eigenvalues(op, ens.n(), LanczosOptions{.seed = ens.seed()});
}

double spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_radius(const Matrix& m) {
  Eigen::EigenSolver<Matrix> solver(m, false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace prbench
