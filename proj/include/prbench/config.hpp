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

#ifndef PRBENCH_CONFIG_HPP
#define PRBENCH_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prbench/ric.hpp"
#include "prbench/solvers.hpp"

namespace prbench {

enum class Experiment { kRun, kSweep, kHeadToHead, kSlopes, kLoo, kOracle, kCdp, kConcentration };
enum class InitMode { kSpectral, kRandom };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);
std::string_view to_string(InitMode mode);
InitMode parse_init(std::string_view name);

/// Flat key=value configuration. Lists are comma separated; an empty `m`
/// means m = ceil(10 n log n) for each n.
struct ExperimentConfig {
  Experiment experiment = Experiment::kRun;
  std::vector<long> n_list{10};
  std::vector<long> m_list;
  std::vector<std::uint64_t> seed_list{0};
  std::vector<Method> methods{Method::kGradientDescent};
  InitMode init = InitMode::kSpectral;
  std::optional<double> eta;
  std::optional<double> beta;
  double tol = 1e-7;
  int max_iters = 10000;
  std::string output = "out";
  ParamSchedule schedule;
  RicConfig ric;
  double fit_upper = 0.5;  // head-to-head window is [tol, fit_upper]
  int cdp_masks = 12;
  int cdp_iters = 140;
  std::string cdp_image;  // empty selects the synthetic 64x64 image
  double oracle_mu = 1.0;
  double oracle_L = 100.0;
  int oracle_steps = 10000;
  int loo_iters = 200;

  /// Sets one key from its textual value. Throws DomainError naming the key.
  void set(const std::string& key, const std::string& value);
  /// Checks list non-emptiness and value ranges.
  void validate() const;
  /// Every key, one per line, in a fixed order.
  std::string serialize() const;

  /// m values paired with n: m_list if given (single value broadcasts),
  /// otherwise the 10 n log n default.
  long m_for(std::size_t n_index) const;
};

ExperimentConfig parse_config(const std::string& text);
/// Throws IoError naming the path when it cannot be read.
ExperimentConfig load_config(const std::string& path);

/// ceil(10 n log n).
long default_m(long n);

}  // namespace prbench

#endif  // PRBENCH_CONFIG_HPP
