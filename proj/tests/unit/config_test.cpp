// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "parascope/config.hpp"
#include "support/fixture.hpp"

namespace parascope {
namespace {

TEST(ParseKeyValues, CommentsAndErrors) {
  const auto kv = parse_key_values("# c\n\n a = 1 \nb=two words\n");
  EXPECT_EQ(kv, (std::map<std::string, std::string>{{"a", "1"}, {"b", "two words"}}));
  EXPECT_THROW(parse_key_values("novalue\n"), ConfigError);
  EXPECT_THROW(parse_key_values("a=1\na=2\n"), ConfigError);
}

TEST(ParseConfig, ReadsAllKeysRelativeToBase) {
  const auto cfg = parse_config(
      "server.port = 9000\nserver.host = 0.0.0.0\ncorpus.index_dir = idx\n"
      "events.log_dir = /tmp/ev\nranking.lambda = 0.5\nranking.page_size = 10\n"
      "ranking.pool_size = 50\nsimilarity.tau_highlight = 1.5\n"
      "similarity.auto_calibrate = false\n",
      "/base");
  EXPECT_EQ(cfg.port, 9000);
  EXPECT_EQ(cfg.host, "0.0.0.0");
  EXPECT_EQ(cfg.index_dir, std::filesystem::path("/base/idx"));
  EXPECT_EQ(cfg.event_log_dir, std::filesystem::path("/tmp/ev"));
  EXPECT_EQ(cfg.ranking.lambda, 0.5);
  EXPECT_EQ(cfg.ranking.page_size, 10u);
  EXPECT_EQ(cfg.ranking.pool_size, 50u);
  EXPECT_EQ(cfg.tau_highlight, 1.5);
  EXPECT_FALSE(cfg.auto_calibrate);
}

TEST(ParseConfig, RejectsBadValues) {
  for (const char* text : {"server.port = 0\n", "server.port = abc\n", "ranking.lambda = x\n",
                           "nope = 1\n", "similarity.auto_calibrate = maybe\n"}) {
    EXPECT_THROW(parse_config(text, "/"), ConfigError) << text;
  }
}

TEST(ResolveSimilarity, ExplicitWinsOverCalibrated) {
  ServiceConfig cfg;
  cfg.d_norm = 9.0;
  const auto s = cfg.resolve_similarity({1.0, 4.0, 2.0});
  EXPECT_EQ(s.tau_highlight, 1.0);
  EXPECT_EQ(s.d_norm, 9.0);
  EXPECT_EQ(s.theta_sim, 2.0);
  cfg.auto_calibrate = false;
  EXPECT_THROW(cfg.resolve_similarity({1.0, 4.0, 2.0}), ConfigError);
  cfg.tau_highlight = 0.5;
  cfg.theta_sim = 0.7;
  EXPECT_EQ(cfg.resolve_similarity({}).theta_sim, 0.7);
}

TEST(Validate, PathsMustExist) {
  testing::TempDir dir;
  ServiceConfig cfg;
  cfg.index_dir = dir.path();
  cfg.event_log_dir = dir.path();
  EXPECT_NO_THROW(cfg.validate());
  cfg.index_dir = dir.path() / "missing";
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.index_dir = dir.path();
  cfg.ranking.lambda = -1;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

}  // namespace
}  // namespace parascope
