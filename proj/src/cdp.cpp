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

#include "prbench/cdp.hpp"

#include <fftw3.h>

#include <cmath>
#include <string>

#include "prbench/errors.hpp"
#include "prbench/rng.hpp"

namespace prbench {

CdpMasks CdpMasks::sample(Index count, Index height, Index width,
                          std::uint64_t seed) {
  if (count < 1 || height < 1 || width < 1) {
    throw DomainError("CdpMasks::sample: sizes must be positive");
  }
  static const Complex kPhases[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const double low = std::sqrt(2.0) / 2.0;
  const double high = std::sqrt(3.0);
  CdpMasks out;
  out.count = count;
  out.height = height;
  out.width = width;
  out.seed = seed;
  for (Index l = 0; l < count; ++l) {
    CounterStream stream(seed, streams::kCdpMask + static_cast<std::uint64_t>(l));
    ComplexVector d(height * width);
    for (Index j = 0; j < d.size(); ++j) {
      const Complex phase = kPhases[stream.next_u32() & 3u];
      const double magnitude = stream.uniform() < 0.8 ? low : high;
      d(j) = phase * magnitude;
    }
    out.masks.push_back(std::move(d));
  }
  return out;
}

struct CdpOperator::Plans {
  Index n = 0;
  fftw_complex* buffer = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  Plans(Index height, Index width) : n(height * width) {
    buffer = fftw_alloc_complex(static_cast<std::size_t>(n));
    // FFTW_ESTIMATE picks the algorithm without timing, so results do not
    // depend on machine load.
    forward = fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width),
                               buffer, buffer, FFTW_FORWARD, FFTW_ESTIMATE);
    backward = fftw_plan_dft_2d(static_cast<int>(height), static_cast<int>(width),
                                buffer, buffer, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Plans() {
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(buffer);
  }
  Complex* data() { return reinterpret_cast<Complex*>(buffer); }
};

CdpOperator::CdpOperator(const CdpMasks& masks)
    : masks_(masks), plans_(std::make_unique<Plans>(masks.height, masks.width)) {}

CdpOperator::~CdpOperator() = default;

ComplexVector CdpOperator::forward(const ComplexVector& z) {
  const Index n = masks_.n();
  if (z.size() != n) throw DomainError("CdpOperator::forward: wrong signal length");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector out(masks_.m());
  Eigen::Map<ComplexVector> buf(plans_->data(), n);
  for (Index l = 0; l < masks_.count; ++l) {
    buf = masks_.masks[l].cwiseProduct(z);
    fftw_execute(plans_->forward);
    ++fft_count_;
    out.segment(l * n, n) = scale * buf;
  }
  return out;
}

ComplexVector CdpOperator::adjoint(const ComplexVector& w) {
  const Index n = masks_.n();
  if (w.size() != masks_.m()) throw DomainError("CdpOperator::adjoint: wrong length");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector out = ComplexVector::Zero(n);
  Eigen::Map<ComplexVector> buf(plans_->data(), n);
  for (Index l = 0; l < masks_.count; ++l) {
    buf = w.segment(l * n, n);
    fftw_execute(plans_->backward);
    ++fft_count_;
    out += scale * masks_.masks[l].conjugate().cwiseProduct(buf);
  }
  return out;
}

namespace {

void check_signal(const ComplexVector& z, const CdpMasks& masks, const char* what) {
  if (z.size() != masks.n()) {
    throw DomainError(std::string(what) + ": signal length " +
                      std::to_string(z.size()) + " does not match masks (" +
                      std::to_string(masks.n()) + ")");
  }
}

void check_obs(const Vector& y, const CdpMasks& masks, const char* what) {
  if (y.size() != masks.m()) {
    throw DomainError(std::string(what) + ": expected " +
                      std::to_string(masks.m()) + " observations");
  }
}

// Shared by cdp_gradient and the solver loop: one forward and one adjoint.
ComplexVector gradient_with(CdpOperator& op, const ComplexVector& z,
                            const Vector& y, double* cost_out) {
  const ComplexVector az = op.forward(z);
  const Vector residual = az.cwiseAbs2() - y;
  if (cost_out) {
    *cost_out = residual.squaredNorm() / (4.0 * static_cast<double>(y.size()));
  }
  const ComplexVector weighted = residual.cast<Complex>().cwiseProduct(az);
  return op.adjoint(weighted) / static_cast<double>(y.size());
}

}  // namespace

Vector cdp_observe(const ComplexVector& z, const CdpMasks& masks) {
  check_signal(z, masks, "cdp_observe");
  CdpOperator op(masks);
  return op.forward(z).cwiseAbs2();
}

double cdp_cost(const ComplexVector& z, const Vector& y, const CdpMasks& masks) {
  check_signal(z, masks, "cdp_cost");
  check_obs(y, masks, "cdp_cost");
  CdpOperator op(masks);
  const Vector residual = op.forward(z).cwiseAbs2() - y;
  return residual.squaredNorm() / (4.0 * static_cast<double>(y.size()));
}

ComplexVector cdp_gradient(const ComplexVector& z, const Vector& y,
                           const CdpMasks& masks) {
  check_signal(z, masks, "cdp_gradient");
  check_obs(y, masks, "cdp_gradient");
  CdpOperator op(masks);
  return gradient_with(op, z, y, nullptr);
}

double relative_error(const ComplexVector& z, const ComplexVector& z_star) {
  if (z.size() != z_star.size()) throw DomainError("relative_error: length mismatch");
  const double ref = z_star.norm();
  if (!(ref > 0.0)) throw DomainError("relative_error: zero reference signal");
  const double cross = std::abs(z.dot(z_star));  // conj(z) . z_star
  const double sq = z.squaredNorm() + z_star.squaredNorm() - 2.0 * cross;
  return std::sqrt(std::max(0.0, sq)) / ref;
}

CdpTrace cdp_run(const Vector& image, Index height, Index width, Index mask_count,
                 Method method, int iters, std::uint64_t seed,
                 const CdpOptions& options) {
  if (image.size() != height * width) {
    throw DomainError("cdp_run: image size does not match height * width");
  }
  if (height * width > (Index{1} << 16)) {
    throw CapabilityError("cdp_run: at most 65536 pixels are supported");
  }
  if (iters < 0) throw DomainError("cdp_run: iters must be >= 0");
  if (!image.allFinite()) throw DomainError("cdp_run: non-finite pixel");

  const CdpMasks masks = CdpMasks::sample(mask_count, height, width, seed);
  CdpOperator op(masks);
  const Index n = masks.n();
  const ComplexVector truth = image.cast<Complex>();
  const Vector y = op.forward(truth).cwiseAbs2();
  const double m = static_cast<double>(masks.m());

  // Spectral initialization: power iteration on v -> (1/m) A^H (y .* A v),
  // scaled to the norm estimate |z|^2 ~ sum(y) / rho_sum, where
  // rho_sum = sum_l |d_l|^2 / n is what sum(y) would be for a unit signal
  // with |d|^2 = 1 on average.
  CounterStream stream(seed, streams::kPower);
  ComplexVector v(n);
  for (Index j = 0; j < n; ++j) v(j) = Complex(stream.normal(), stream.normal());
  v.normalize();
  for (int k = 0; k < options.power_iters; ++k) {
    const ComplexVector az = op.forward(v);
    v = op.adjoint(y.cast<Complex>().cwiseProduct(az)) / m;
    v.normalize();
  }
  double mask_energy = 0.0;
  for (const auto& d : masks.masks) mask_energy += d.squaredNorm();
  const double rho_sum = mask_energy / static_cast<double>(n);
  const double norm_estimate = std::sqrt(y.sum() / rho_sum);
  const ComplexVector z0 = norm_estimate * v;

  CdpTrace trace;
  trace.method = method;
  trace.init_ffts = op.fft_count();

  const double rho = rho_sum / static_cast<double>(mask_count);  // mean |row|^2
  SolverParams defaults = default_params(std::max<Index>(n, 2), z0.norm(), method,
                                         options.schedule);
  const double scale = static_cast<double>(n) / rho;
  trace.eta = options.eta.value_or(defaults.eta * scale * scale);
  trace.beta = method == Method::kGradientDescent
                   ? 0.0
                   : options.beta.value_or(defaults.beta);

  ComplexVector curr = z0;
  ComplexVector prev = z0;
  trace.rel_err.push_back(relative_error(curr, truth));
  trace.status = Status::kMaxIters;
  // Pixel intensities set the cost scale, so the cap is relative to the start.
  const double cost_cap =
      options.divergence_cap * std::max(1.0, cdp_cost(z0, y, masks));
  for (int t = 0; t < iters; ++t) {
    const ComplexVector momentum = trace.beta * (curr - prev);
    const ComplexVector anchor =
        method == Method::kNesterov ? ComplexVector(curr + momentum) : curr;
    double anchor_cost = 0.0;
    const ComplexVector grad = gradient_with(op, anchor, y, &anchor_cost);
    ++trace.steps;
    ComplexVector next = curr - trace.eta * grad + momentum;
    if (!std::isfinite(anchor_cost) || anchor_cost > cost_cap ||
        !next.allFinite()) {
      trace.status = Status::kDiverged;
      break;
    }
    prev = std::move(curr);
    curr = std::move(next);
    trace.rel_err.push_back(relative_error(curr, truth));
  }
  trace.iteration_ffts = op.fft_count() - trace.init_ffts;
  trace.final_iterate = curr;
  return trace;
}

}  // namespace prbench
