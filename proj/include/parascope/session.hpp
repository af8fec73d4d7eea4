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

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parascope/corpus.hpp"
#include "parascope/index.hpp"
#include "parascope/ranker.hpp"
#include "parascope/similarity.hpp"

namespace parascope {

using SessionId = std::string;

// Rejected event or request against a session. The session is unchanged.
class SessionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EventKind {
  query,
  click_reference,
  mark_paragraph_explored,
  copy_reference,
  open_similar,
  toggle_show_explored,
};

const char* to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(const std::string& s);

// Payload keys, fixed per kind:
//   query                    {"q": string, "page": [para_id]}
//   click_reference          {"paper_id": string}
//   copy_reference           {"paper_id": string}
//   mark_paragraph_explored  {"para_id": string}
//   open_similar             {"para_id": string, "results": [para_id]}
//   toggle_show_explored     {"show": bool}
struct EventRecord {
  std::string timestamp;  // UTC, "YYYY-MM-DDTHH:MM:SS.mmmZ"
  SessionId session_id;
  EventKind kind = EventKind::query;
  nlohmann::json payload = nlohmann::json::object();

  bool operator==(const EventRecord&) const = default;
};

struct Session {
  SessionId session_id;
  std::vector<std::string> queries;
  RefSet explored_refs;
  RefSet clicked_refs;
  std::set<ParaId> explored_paras;
  std::set<ParaId> seen_paras;
  RefSet seen_refs;
  bool show_explored = false;
  std::vector<EventRecord> events;

  bool operator==(const Session&) const = default;
};

// Receives each accepted event before it is applied to the session.
class EventSink {
 public:
  virtual ~EventSink() = default;
  virtual void append(const EventRecord& event) = 0;
};

/// Validates `event` against the session and corpus, hands it to `sink`
/// (when given) and then applies it. Clicks and copies add the paper to
/// clicked_refs and explored_refs; marking a paragraph explored adds it to
/// explored_paras and all of its references to explored_refs; queries and
/// similar-views grow the seen sets. Repeated events are logged but leave the
/// sets unchanged.
///
/// Throws SessionError for an invalid event, in which case neither the
/// session nor the sink is touched.
void record_event(Session& session, const EventRecord& event, const Corpus& corpus,
                  EventSink* sink = nullptr);

// Rebuilds a session by applying `events` in order.
Session replay(const SessionId& id, const std::vector<EventRecord>& events, const Corpus& corpus);

struct TimelineRange {
  int min_year = 0;
  int max_year = 0;

  bool operator==(const TimelineRange&) const = default;
};

struct ParagraphDecoration {
  std::size_t unexplored_count = 0;
  std::set<std::size_t> lowlit_sentences;
  std::map<std::size_t, double> highlights;  // mention index -> (0, 1]
  std::map<PaperId, std::size_t> citation_freq;  // only counts >= 2
  std::vector<int> timeline;  // one year per referenced paper, ascending
  std::optional<TimelineRange> timeline_range;  // over the whole page
  std::vector<Span> self_ref_spans;
  bool explored = false;

  bool operator==(const ParagraphDecoration&) const = default;
};

std::optional<TimelineRange> page_timeline_range(const std::vector<const ParagraphRecord*>& page,
                                                 const Corpus& corpus);

ParagraphDecoration decorate(const ParagraphRecord& paragraph, const Session& session,
                             const std::vector<const ParagraphRecord*>& current_page,
                             const Corpus& corpus, const EmbeddingProvider& provider,
                             const SimilarityConfig& config);

struct ProgressSnapshot {
  std::size_t paras_explored = 0;
  std::size_t paras_total = 0;
  std::size_t refs_explored = 0;
  std::size_t refs_total = 0;

  bool operator==(const ProgressSnapshot&) const = default;
};

ProgressSnapshot progress(const Session& session);

/// Ranks `pool` for the session: explored paragraphs are dropped unless
/// show_explored is set, and the remainder goes through mmr_rerank with the
/// session's explored references as the covered seed.
RankedPage rank_for_session(const Session& session, const std::vector<QueryCandidate>& pool,
                            const RefsByPara& refs, const RankingConfig& config);

// Recomputes the page for a query the session has already issued. Throws
// SessionError for a query the session never issued.
RankedPage rerank_on_update(const Session& session, const std::string& query,
                            const InvertedIndex& index, const RefsByPara& refs,
                            const RankingConfig& config);

}  // namespace parascope
