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

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "prbench/config.hpp"
#include "prbench/errors.hpp"
#include "prbench/harness.hpp"

namespace {

// Applies trailing "--key value" (or "--key=value") pairs on top of cfg.
void apply_overrides(prbench::ExperimentConfig& cfg, const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    if (arg.rfind("--", 0) != 0) {
      throw prbench::DomainError("unexpected argument '" + arg + "'");
    }
    std::string key = arg.substr(2);
    std::string value;
    const auto eq = key.find('=');
    if (eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= args.size()) {
        throw prbench::DomainError("missing value for '" + arg + "'");
      }
      value = args[++i];
    }
    std::replace(key.begin(), key.end(), '-', '_');
    cfg.set(key, value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accelerated phase retrieval benchmark"};
  app.require_subcommand(1);
  std::string config_path;
  bool print_config = false;
  const std::vector<std::string> names = {"run",    "sweep",  "headtohead", "slopes",
                                          "loo",    "oracle", "cdp",        "concentration"};
  for (const auto& name : names) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " experiment");
    sub->add_option("--config", config_path, "key=value configuration file");
    sub->add_flag("--print-config", print_config, "Print the effective configuration");
    sub->allow_extras();
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  CLI::App* sub = app.get_subcommands().front();

  try {
    prbench::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = prbench::load_config(config_path);
    cfg.experiment = prbench::parse_experiment(sub->get_name());
    apply_overrides(cfg, sub->remaining());
    cfg.validate();
    if (print_config) std::cout << cfg.serialize();
    return prbench::dispatch(cfg);
  } catch (const prbench::IoError& e) {
    std::cerr << "prbench: " << e.what() << '\n';
    return 2;
  } catch (const prbench::DomainError& e) {
    std::cerr << "prbench: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "prbench: " << e.what() << '\n';
    return 2;
  }
}
