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
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "parascope/bundle.hpp"
#include "parascope/event_log.hpp"
#include "parascope/ranker.hpp"
#include "parascope/session.hpp"
#include "parascope/similarity.hpp"

namespace parascope {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;

  std::string dump() const { return body.dump(); }
};

/// Request handlers behind the HTTP routes. Every public method is safe to
/// call concurrently; events for one session are applied one at a time.
///
///   POST /sessions                      create_session
///   GET  /search?q=&session_id=         search
///   GET  /paragraphs/{id}/similar       similar
///   GET  /paragraphs/{id}/paper         paragraph_paper
///   GET  /papers/{id}                   paper
///   POST /sessions/{id}/events          post_event
///   GET  /sessions/{id}/progress        session_progress
class Service {
 public:
  struct Options {
    RankingConfig ranking;
    SimilarityConfig similarity;
    std::filesystem::path event_log_dir;
    // Overridable for reproducible fixtures.
    std::function<std::string()> new_session_id;
    std::function<std::string()> clock;
  };

  // Restores every session found in the event log directory by replay.
  Service(IndexBundle bundle, Options options);

  ApiResponse create_session();
  ApiResponse search(const std::optional<std::string>& q,
                     const std::optional<std::string>& session_id);
  ApiResponse similar(const std::string& para_id, const std::optional<std::string>& session_id);
  ApiResponse paragraph_paper(const std::string& para_id) const;
  ApiResponse paper(const std::string& paper_id) const;
  ApiResponse post_event(const std::string& session_id, const std::string& body);
  ApiResponse session_progress(const std::string& session_id);

  // Copy of a session's state, for tests and tooling.
  std::optional<Session> snapshot(const std::string& session_id);

  const Corpus& corpus() const { return bundle_.corpus; }
  const RankingConfig& ranking() const { return options_.ranking; }

 private:
  struct Slot {
    std::mutex mu;
    Session session;
    std::unique_ptr<FileEventSink> sink;
  };

  std::shared_ptr<Slot> find_slot(const std::string& id);
  void append(Slot& slot, EventKind kind, nlohmann::json payload);
  nlohmann::json entry_json(const ParagraphRecord& p, const ParagraphDecoration& d) const;
  std::vector<const ParagraphRecord*> paragraphs_of(const std::vector<ParaId>& ids) const;

  IndexBundle bundle_;
  Options options_;
  RefsByPara refs_;
  std::map<PaperId, std::vector<ParaId>> citing_;
  CorpusEmbeddingProvider embeddings_;
  EventStore store_;

  std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
};

ApiResponse error_response(int status, const std::string& message);

nlohmann::json progress_json(const ProgressSnapshot& p);
nlohmann::json decoration_json(const ParagraphDecoration& d, const ParagraphRecord& p);

std::string random_session_id();

}  // namespace parascope
