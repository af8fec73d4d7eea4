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

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "parascope/ranker.hpp"
#include "parascope/similarity.hpp"

namespace parascope {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` text; '#' starts a comment line. Keys are dotted:
///
///   server.port              1..65535 (default 8080)
///   server.host              bind address (default 127.0.0.1)
///   corpus.index_dir         directory written by `parascope ingest`
///   events.log_dir           per-session event logs
///   ingest.self_ref_list     optional phrase list
///   ranking.lambda / ranking.page_size / ranking.pool_size
///   similarity.tau_highlight / similarity.d_norm / similarity.theta_sim
///   similarity.auto_calibrate  true: unset thresholds come from the index
///
/// Relative paths are resolved against the config file's directory.
struct ServiceConfig {
  int port = 8080;
  std::string host = "127.0.0.1";
  std::filesystem::path index_dir;
  std::filesystem::path event_log_dir;
  std::optional<std::filesystem::path> self_ref_list;
  RankingConfig ranking;
  bool auto_calibrate = true;
  std::optional<double> tau_highlight;
  std::optional<double> d_norm;
  std::optional<double> theta_sim;

  // Explicit values win; the rest come from `calibrated` when
  // auto_calibrate is on. Throws ConfigError if a threshold stays unset.
  SimilarityConfig resolve_similarity(const SimilarityConfig& calibrated) const;

  // Ranges and path existence.
  void validate() const;
};

std::map<std::string, std::string> parse_key_values(std::string_view text);
ServiceConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
ServiceConfig load_config(const std::filesystem::path& path);

}  // namespace parascope
