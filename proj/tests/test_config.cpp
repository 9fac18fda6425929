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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "prbench/config.hpp"
#include "prbench/errors.hpp"

namespace prbench {
namespace {

TEST(Config, DefaultsRoundTrip) {
  const ExperimentConfig cfg;
  const std::string text = cfg.serialize();
  EXPECT_EQ(parse_config(text).serialize(), text);
}

TEST(Config, ParsesListsCommentsAndOptionals) {
  const ExperimentConfig cfg = parse_config(
      "# comment\n"
      "experiment = sweep\n"
      "n=10, 50,100\n"
      "m=200,500\n"
      "seeds=0,1,2\n"
      "methods=gd,hb,nag\n"
      "init=random\n"
      "eta=0.01\n"
      "\n"
      "momentum_offset=0.5\n");
  EXPECT_EQ(cfg.experiment, Experiment::kSweep);
  EXPECT_EQ(cfg.n_list, (std::vector<long>{10, 50, 100}));
  EXPECT_EQ(cfg.m_list, (std::vector<long>{200, 500}));
  EXPECT_EQ(cfg.seed_list.size(), 3u);
  EXPECT_EQ(cfg.methods.back(), Method::kNesterov);
  EXPECT_EQ(cfg.init, InitMode::kRandom);
  ASSERT_TRUE(cfg.eta.has_value());
  EXPECT_EQ(*cfg.eta, 0.01);
  EXPECT_FALSE(cfg.beta.has_value());
  EXPECT_EQ(cfg.schedule.momentum_offset, 0.5);
  const std::string text = cfg.serialize();
  EXPECT_EQ(parse_config(text).serialize(), text);
}

TEST(Config, RoundTripPreservesDoublesExactly) {
  ExperimentConfig cfg;
  cfg.tol = 0.1 + 0.2;
  cfg.beta = 1.0 / 3.0;
  const ExperimentConfig back = parse_config(cfg.serialize());
  EXPECT_EQ(back.tol, cfg.tol);
  EXPECT_EQ(*back.beta, *cfg.beta);
}

TEST(Config, Errors) {
  EXPECT_THROW(parse_config("bogus=1\n"), DomainError);
  EXPECT_THROW(parse_config("n\n"), DomainError);
  EXPECT_THROW(parse_config("n=ten\n"), DomainError);
  EXPECT_THROW(parse_config("tol=1e-3x\n"), DomainError);
  EXPECT_THROW(parse_config("experiment=plot\n"), DomainError);
  ExperimentConfig empty;
  empty.set("methods", "");
  EXPECT_THROW(empty.validate(), DomainError);
  EXPECT_THROW(load_config("/nonexistent/dir/x.cfg"), IoError);
}

TEST(Config, DefaultM) {
  EXPECT_EQ(default_m(100), static_cast<long>(std::ceil(1000.0 * std::log(100.0))));
  ExperimentConfig cfg;
  cfg.n_list = {16, 64};
  EXPECT_EQ(cfg.m_for(1), default_m(64));
  cfg.m_list = {300};
  EXPECT_EQ(cfg.m_for(1), 300);
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "prbench_config_test.cfg";
  {
    std::ofstream out(path);
    out << "experiment=oracle\noracle_L=25\n";
  }
  const ExperimentConfig cfg = load_config(path.string());
  EXPECT_EQ(cfg.experiment, Experiment::kOracle);
  EXPECT_EQ(cfg.oracle_L, 25.0);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace prbench
