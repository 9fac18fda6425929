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

#include "prbench/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "prbench/errors.hpp"

namespace prbench {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  if (trim(value).empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used == v.size() && std::isfinite(d)) return d;
  } catch (const std::exception&) {
  }
  throw DomainError("config key '" + key + "': expected a number, got '" + v + "'");
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw DomainError("config key '" + key + "': expected an integer, got '" + v + "'");
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += render(items[i]);
  }
  return out;
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::kRun: return "run";
    case Experiment::kSweep: return "sweep";
    case Experiment::kHeadToHead: return "headtohead";
    case Experiment::kSlopes: return "slopes";
    case Experiment::kLoo: return "loo";
    case Experiment::kOracle: return "oracle";
    case Experiment::kCdp: return "cdp";
    case Experiment::kConcentration: return "concentration";
  }
  return "run";
}

Experiment parse_experiment(std::string_view name) {
  for (auto e : {Experiment::kRun, Experiment::kSweep, Experiment::kHeadToHead,
                 Experiment::kSlopes, Experiment::kLoo, Experiment::kOracle,
                 Experiment::kCdp, Experiment::kConcentration}) {
    if (to_string(e) == name) return e;
  }
  throw DomainError("unknown experiment '" + std::string(name) + "'");
}

std::string_view to_string(InitMode mode) {
  return mode == InitMode::kSpectral ? "spectral" : "random";
}

InitMode parse_init(std::string_view name) {
  if (name == "spectral") return InitMode::kSpectral;
  if (name == "random") return InitMode::kRandom;
  throw DomainError("unknown init '" + std::string(name) + "'");
}

long default_m(long n) {
  const double nd = static_cast<double>(n);
  return static_cast<long>(std::ceil(10.0 * nd * std::log(nd)));
}

void ExperimentConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  auto longs = [&] {
    std::vector<long> out;
    for (const auto& item : split_list(v)) out.push_back(to_long(key, item));
    return out;
  };
  auto opt_double = [&]() -> std::optional<double> {
    if (v.empty()) return std::nullopt;
    return to_double(key, v);
  };
  if (key == "experiment") {
    experiment = parse_experiment(v);
  } else if (key == "n") {
    n_list = longs();
  } else if (key == "m") {
    m_list = longs();
  } else if (key == "seeds") {
    seed_list.clear();
    for (long s : longs()) {
      if (s < 0) throw DomainError("config key 'seeds': negative seed");
      seed_list.push_back(static_cast<std::uint64_t>(s));
    }
  } else if (key == "methods") {
    methods.clear();
    for (const auto& item : split_list(v)) methods.push_back(parse_method(item));
  } else if (key == "init") {
    init = parse_init(v);
  } else if (key == "eta") {
    eta = opt_double();
  } else if (key == "beta") {
    beta = opt_double();
  } else if (key == "tol") {
    tol = to_double(key, v);
  } else if (key == "max_iters") {
    max_iters = static_cast<int>(to_long(key, v));
  } else if (key == "output") {
    output = v;
  } else if (key == "step_constant") {
    schedule.step_constant = to_double(key, v);
  } else if (key == "momentum_offset") {
    schedule.momentum_offset = to_double(key, v);
  } else if (key == "c1") {
    ric.C1 = to_double(key, v);
  } else if (key == "c2") {
    ric.C2 = to_double(key, v);
  } else if (key == "c3") {
    ric.C3 = to_double(key, v);
  } else if (key == "fit_upper") {
    fit_upper = to_double(key, v);
  } else if (key == "cdp_masks") {
    cdp_masks = static_cast<int>(to_long(key, v));
  } else if (key == "cdp_iters") {
    cdp_iters = static_cast<int>(to_long(key, v));
  } else if (key == "cdp_image") {
    cdp_image = v;
  } else if (key == "oracle_mu") {
    oracle_mu = to_double(key, v);
  } else if (key == "oracle_L") {
    oracle_L = to_double(key, v);
  } else if (key == "oracle_steps") {
    oracle_steps = static_cast<int>(to_long(key, v));
  } else if (key == "loo_iters") {
    loo_iters = static_cast<int>(to_long(key, v));
  } else {
    throw DomainError("unknown config key '" + key + "'");
  }
}

void ExperimentConfig::validate() const {
  if (n_list.empty()) throw DomainError("config: n list is empty");
  if (seed_list.empty()) throw DomainError("config: seeds list is empty");
  if (methods.empty()) throw DomainError("config: methods list is empty");
  for (long n : n_list) {
    if (n < 1) throw DomainError("config: n must be positive");
  }
  for (long m : m_list) {
    if (m < 1) throw DomainError("config: m must be positive");
  }
  if (!m_list.empty() && m_list.size() != 1 && m_list.size() != n_list.size() &&
      experiment != Experiment::kSweep) {
    throw DomainError("config: m list must have one entry or one per n");
  }
  if (!(tol > 0.0)) throw DomainError("config: tol must be positive");
  if (max_iters < 0) throw DomainError("config: max_iters must be >= 0");
  if (output.empty()) throw DomainError("config: output path is empty");
  if (!(fit_upper > tol)) throw DomainError("config: fit_upper must exceed tol");
  if (cdp_masks < 1 || cdp_iters < 0) throw DomainError("config: bad cdp settings");
  if (!(oracle_mu > 0.0) || oracle_L < oracle_mu) {
    throw DomainError("config: oracle needs 0 < mu <= L");
  }
  if (oracle_steps < 2 || loo_iters < 0) throw DomainError("config: bad step counts");
  ric.validate();
}

std::string ExperimentConfig::serialize() const {
  std::ostringstream out;
  auto num = [](long x) { return std::to_string(x); };
  out << "experiment=" << to_string(experiment) << '\n';
  out << "n=" << join(n_list, num) << '\n';
  out << "m=" << join(m_list, num) << '\n';
  out << "seeds=" << join(seed_list, [](std::uint64_t s) { return std::to_string(s); })
      << '\n';
  out << "methods="
      << join(methods, [](Method mt) { return std::string(to_string(mt)); }) << '\n';
  out << "init=" << to_string(init) << '\n';
  out << "eta=" << (eta ? fmt(*eta) : "") << '\n';
  out << "beta=" << (beta ? fmt(*beta) : "") << '\n';
  out << "tol=" << fmt(tol) << '\n';
  out << "max_iters=" << max_iters << '\n';
  out << "output=" << output << '\n';
  out << "step_constant=" << fmt(schedule.step_constant) << '\n';
  out << "momentum_offset=" << fmt(schedule.momentum_offset) << '\n';
  out << "c1=" << fmt(ric.C1) << '\n';
  out << "c2=" << fmt(ric.C2) << '\n';
  out << "c3=" << fmt(ric.C3) << '\n';
  out << "fit_upper=" << fmt(fit_upper) << '\n';
  out << "cdp_masks=" << cdp_masks << '\n';
  out << "cdp_iters=" << cdp_iters << '\n';
  out << "cdp_image=" << cdp_image << '\n';
  out << "oracle_mu=" << fmt(oracle_mu) << '\n';
  out << "oracle_L=" << fmt(oracle_L) << '\n';
  out << "oracle_steps=" << oracle_steps << '\n';
  out << "loo_iters=" << loo_iters << '\n';
  return out.str();
}

long ExperimentConfig::m_for(std::size_t n_index) const {
  if (m_list.empty()) return default_m(n_list.at(n_index));
  if (m_list.size() == 1) return m_list.front();
  return m_list.at(n_index);
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": missing '='");
    }
    cfg.set(trim(t.substr(0, eq)), t.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open config");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace prbench
