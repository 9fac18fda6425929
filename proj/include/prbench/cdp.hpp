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

#ifndef PRBENCH_CDP_HPP
#define PRBENCH_CDP_HPP

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "prbench/model.hpp"
#include "prbench/solvers.hpp"

namespace prbench {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;

/// L octanary modulation patterns d_l = b1 * b2 over an height x width grid:
/// b1 uniform on {1, -1, i, -i}; b2 = sqrt(2)/2 with probability 4/5 and
/// sqrt(3) with probability 1/5. Mask l comes from stream
/// (seed, streams::kCdpMask + l).
struct CdpMasks {
  Index count = 0;
  Index height = 0;
  Index width = 0;
  std::uint64_t seed = 0;
  std::vector<ComplexVector> masks;

  Index n() const { return height * width; }
  Index m() const { return count * height * width; }

  static CdpMasks sample(Index count, Index height, Index width, std::uint64_t seed);
};

/// A z = [F(d_1 .* z); ...; F(d_L .* z)] with F the unitary 2-D DFT of a
/// row-major height x width image. Every call to `forward` or `adjoint` costs
/// exactly L FFTs, tallied in fft_count().
class CdpOperator {
 public:
  explicit CdpOperator(const CdpMasks& masks);
  ~CdpOperator();
  CdpOperator(const CdpOperator&) = delete;
  CdpOperator& operator=(const CdpOperator&) = delete;

  ComplexVector forward(const ComplexVector& z);
  ComplexVector adjoint(const ComplexVector& w);

  long fft_count() const { return fft_count_; }
  const CdpMasks& masks() const { return masks_; }

 private:
  struct Plans;
  const CdpMasks& masks_;
  std::unique_ptr<Plans> plans_;
  long fft_count_ = 0;
};

/// y block l = |F(d_l .* z)|^2.
Vector cdp_observe(const ComplexVector& z, const CdpMasks& masks);

/// 1/(4m) sum ((|Az|^2 - y)^2), m = L n.
double cdp_cost(const ComplexVector& z, const Vector& y, const CdpMasks& masks);

/// (1/m) A^H ((|Az|^2 - y) .* Az). Real and imaginary parts are the partial
/// derivatives of cdp_cost with respect to Re z and Im z.
ComplexVector cdp_gradient(const ComplexVector& z, const Vector& y,
                           const CdpMasks& masks);

/// min over theta of |e^{i theta} z - z_star| / |z_star|.
double relative_error(const ComplexVector& z, const ComplexVector& z_star);

struct CdpOptions {
  ParamSchedule schedule;
  std::optional<double> eta;   // overrides the scaled default
  std::optional<double> beta;  // overrides the schedule momentum
  int power_iters = 50;
  double divergence_cap = 1e8;
};

struct CdpTrace {
  Method method = Method::kGradientDescent;
  std::vector<double> rel_err;  // one entry per iteration, starting at t = 0
  Status status = Status::kMaxIters;
  ComplexVector final_iterate;
  double eta = 0.0;
  double beta = 0.0;
  long init_ffts = 0;
  long iteration_ffts = 0;  // FFTs spent inside the iterations only
  int steps = 0;            // gradient evaluations inside the iterations
};

/// Recovers a real grayscale image (row-major pixels) from coded diffraction
/// patterns: spectral initialization, then `iters` steps of Wirtinger flow or
/// its heavy-ball / Nesterov variant.
///
/// The default step is default_params(n, |z0|).eta scaled by (n / rho)^2,
/// where rho is the mean squared row norm of A. Unitary DFT rows have
/// rho ~ 1 instead of the ~n of a Gaussian row, which rescales the Hessian by
/// (rho / n)^2.
CdpTrace cdp_run(const Vector& image, Index height, Index width, Index mask_count,
                 Method method, int iters, std::uint64_t seed,
                 const CdpOptions& options = {});

}  // namespace prbench

#endif  // PRBENCH_CDP_HPP
