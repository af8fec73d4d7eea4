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

#include "parascope/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "parascope/text.hpp"

namespace parascope {

namespace {

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  const auto l = to_lower_ascii(v);
  if (l == "true" || l == "1" || l == "yes") return true;
  if (l == "false" || l == "0" || l == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

std::size_t to_size(const std::string& key, const std::string& v) {
  const auto n = to_int(key, v);
  if (n <= 0) throw ConfigError(key + " must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

std::map<std::string, std::string> parse_key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto key = std::string(trim(t.substr(0, eq)));
    auto value = std::string(trim(t.substr(eq + 1)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, value).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key " + key);
    }
  }
  return out;
}

ServiceConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  ServiceConfig cfg;
  auto path = [&](const std::string& v) {
    std::filesystem::path p(v);
    return p.is_absolute() ? p : base_dir / p;
  };
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "server.port") {
      const auto port = to_int(key, value);
      if (port < 1 || port > 65535) throw ConfigError("server.port must lie in [1, 65535]");
      cfg.port = static_cast<int>(port);
    } else if (key == "server.host") {
      cfg.host = value;
    } else if (key == "corpus.index_dir") {
      cfg.index_dir = path(value);
    } else if (key == "events.log_dir") {
      cfg.event_log_dir = path(value);
    } else if (key == "ingest.self_ref_list") {
      cfg.self_ref_list = path(value);
    } else if (key == "ranking.lambda") {
      cfg.ranking.lambda = to_double(key, value);
    } else if (key == "ranking.page_size") {
      cfg.ranking.page_size = to_size(key, value);
    } else if (key == "ranking.pool_size") {
      cfg.ranking.pool_size = to_size(key, value);
    } else if (key == "similarity.tau_highlight") {
      cfg.tau_highlight = to_double(key, value);
    } else if (key == "similarity.d_norm") {
      cfg.d_norm = to_double(key, value);
    } else if (key == "similarity.theta_sim") {
      cfg.theta_sim = to_double(key, value);
    } else if (key == "similarity.auto_calibrate") {
      cfg.auto_calibrate = to_bool(key, value);
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  return cfg;
}

ServiceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

SimilarityConfig ServiceConfig::resolve_similarity(const SimilarityConfig& calibrated) const {
  auto pick = [&](const std::optional<double>& v, double fallback, const char* key) {
    if (v) return *v;
    if (!auto_calibrate) {
      throw ConfigError(std::string(key) + " must be set when similarity.auto_calibrate is false");
    }
    return fallback;
  };
  SimilarityConfig s;
  s.tau_highlight = pick(tau_highlight, calibrated.tau_highlight, "similarity.tau_highlight");
  s.d_norm = pick(d_norm, calibrated.d_norm, "similarity.d_norm");
  s.theta_sim = pick(theta_sim, calibrated.theta_sim, "similarity.theta_sim");
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

void ServiceConfig::validate() const {
  if (port < 1 || port > 65535) throw ConfigError("server.port must lie in [1, 65535]");
  try {
    ranking.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  auto must_exist = [](const std::filesystem::path& p, const char* key) {
    if (p.empty()) throw ConfigError(std::string(key) + " is required");
    if (!std::filesystem::exists(p)) {
      throw ConfigError(std::string(key) + ": " + p.string() + " does not exist");
    }
  };
  must_exist(index_dir, "corpus.index_dir");
  must_exist(event_log_dir, "events.log_dir");
  if (self_ref_list) must_exist(*self_ref_list, "ingest.self_ref_list");
}

}  // namespace parascope
