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

#include "parascope/session.hpp"

#include <algorithm>
#include <array>

namespace parascope {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<EventKind, const char*>, 6> kKindNames{{
    {EventKind::query, "query"},
    {EventKind::click_reference, "click_reference"},
    {EventKind::mark_paragraph_explored, "mark_paragraph_explored"},
    {EventKind::copy_reference, "copy_reference"},
    {EventKind::open_similar, "open_similar"},
    {EventKind::toggle_show_explored, "toggle_show_explored"},
}};

std::vector<std::string> payload_keys(EventKind kind) {
  switch (kind) {
    case EventKind::query: return {"page", "q"};
    case EventKind::click_reference:
    case EventKind::copy_reference: return {"paper_id"};
    case EventKind::mark_paragraph_explored: return {"para_id"};
    case EventKind::open_similar: return {"para_id", "results"};
    case EventKind::toggle_show_explored: return {"show"};
  }
  return {};
}

const std::string& string_field(const json& payload, const char* key) {
  const auto& v = payload.at(key);
  if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
    throw SessionError(std::string("payload field '") + key + "' must be a non-empty string");
  }
  return v.get_ref<const std::string&>();
}

std::vector<ParaId> para_list(const json& payload, const char* key, const Corpus& corpus) {
  const auto& v = payload.at(key);
  if (!v.is_array()) throw SessionError(std::string("payload field '") + key + "' must be a list");
  std::vector<ParaId> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw SessionError("paragraph ids must be strings");
    auto id = x.get<std::string>();
    if (!corpus.find_paragraph(id)) throw SessionError("unknown paragraph: " + id);
    out.push_back(std::move(id));
  }
  return out;
}

void see(Session& s, const ParaId& id, const Corpus& corpus) {
  s.seen_paras.insert(id);
  for (const auto& m : corpus.paragraphs.at(id).references) s.seen_refs.insert(m.ref_paper_id);
}

}  // namespace

const char* to_string(EventKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<EventKind> event_kind_from_string(const std::string& s) {
  for (const auto& [k, name] : kKindNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

void record_event(Session& session, const EventRecord& event, const Corpus& corpus,
                  EventSink* sink) {
  if (event.session_id != session.session_id) {
    throw SessionError("event belongs to session " + event.session_id);
  }
  if (!session.events.empty() && event.timestamp < session.events.back().timestamp) {
    throw SessionError("event timestamp precedes the previous event");
  }
  if (!event.payload.is_object()) throw SessionError("payload must be an object");
  auto expected = payload_keys(event.kind);
  std::vector<std::string> actual;
  for (const auto& [k, _] : event.payload.items()) actual.push_back(k);
  if (actual != expected) {
    throw SessionError(std::string("bad payload keys for ") + to_string(event.kind));
  }

  // Work on a copy of the sets so a rejected event leaves no trace; the
  // event list is moved rather than copied.
  auto history = std::move(session.events);
  Session next = session;
  session.events = std::move(history);
  switch (event.kind) {
    case EventKind::query: {
      const auto& q = string_field(event.payload, "q");
      const auto page = para_list(event.payload, "page", corpus);
      next.queries.push_back(q);
      for (const auto& id : page) see(next, id, corpus);
      break;
    }
    case EventKind::click_reference:
    case EventKind::copy_reference: {
      const auto& id = string_field(event.payload, "paper_id");
      if (!session.seen_refs.count(id)) {
        throw SessionError("reference " + id + " has not been shown in this session");
      }
      next.clicked_refs.insert(id);
      next.explored_refs.insert(id);
      break;
    }
    case EventKind::mark_paragraph_explored: {
      const auto& id = string_field(event.payload, "para_id");
      if (!session.seen_paras.count(id)) {
        throw SessionError("paragraph " + id + " has not been shown in this session");
      }
      next.explored_paras.insert(id);
      for (const auto& m : corpus.paragraphs.at(id).references) {
        next.explored_refs.insert(m.ref_paper_id);
      }
      break;
    }
    case EventKind::open_similar: {
      const auto& id = string_field(event.payload, "para_id");
      if (!corpus.find_paragraph(id)) throw SessionError("unknown paragraph: " + id);
      const auto results = para_list(event.payload, "results", corpus);
      see(next, id, corpus);
      for (const auto& r : results) see(next, r, corpus);
      break;
    }
    case EventKind::toggle_show_explored: {
      const auto& v = event.payload.at("show");
      if (!v.is_boolean()) throw SessionError("payload field 'show' must be a boolean");
      next.show_explored = v.get<bool>();
      break;
    }
  }

  if (sink != nullptr) sink->append(event);
  next.events = std::move(session.events);
  next.events.push_back(event);
  session = std::move(next);
}

Session replay(const SessionId& id, const std::vector<EventRecord>& events, const Corpus& corpus) {
  Session s;
  s.session_id = id;
  for (const auto& e : events) record_event(s, e, corpus);
  return s;
}

std::optional<TimelineRange> page_timeline_range(const std::vector<const ParagraphRecord*>& page,
                                                 const Corpus& corpus) {
  std::optional<TimelineRange> range;
  for (const auto* p : page) {
    for (const auto& ref : p->distinct_refs()) {
      const auto* paper = corpus.find_paper(ref);
      if (paper == nullptr) continue;
      if (!range) {
        range = TimelineRange{paper->year, paper->year};
      } else {
        range->min_year = std::min(range->min_year, paper->year);
        range->max_year = std::max(range->max_year, paper->year);
      }
    }
  }
  return range;
}

ParagraphDecoration decorate(const ParagraphRecord& paragraph, const Session& session,
                             const std::vector<const ParagraphRecord*>& current_page,
                             const Corpus& corpus, const EmbeddingProvider& provider,
                             const SimilarityConfig& config) {
  ParagraphDecoration d;
  const auto refs = paragraph.distinct_refs();
  for (const auto& r : refs) d.unexplored_count += session.explored_refs.count(r) ? 0 : 1;

  for (std::size_t i = 0; i < paragraph.references.size(); ++i) {
    const auto& m = paragraph.references[i];
    if (session.explored_refs.count(m.ref_paper_id)) {
      if (auto s = paragraph.sentence_of(m.span)) d.lowlit_sentences.insert(*s);
      continue;
    }
    const double intensity =
        highlight_intensity(m.ref_paper_id, session.explored_refs, provider, config);
    if (intensity > 0.0) d.highlights.emplace(i, intensity);
  }

  for (const auto& r : refs) {
    std::size_t count = 0;
    for (const auto* p : current_page) {
      const auto& pr = p->references;
      count += std::any_of(pr.begin(), pr.end(),
                           [&](const ReferenceMention& m) { return m.ref_paper_id == r; });
    }
    if (count >= 2) d.citation_freq.emplace(r, count);
    if (const auto* paper = corpus.find_paper(r)) d.timeline.push_back(paper->year);
  }
  std::sort(d.timeline.begin(), d.timeline.end());
  d.timeline_range = page_timeline_range(current_page, corpus);
  d.self_ref_spans = paragraph.self_ref_spans;
  d.explored = session.explored_paras.count(paragraph.para_id) > 0;
  return d;
}

ProgressSnapshot progress(const Session& session) {
  ProgressSnapshot p;
  p.paras_total = session.seen_paras.size();
  p.refs_total = session.seen_refs.size();
  for (const auto& id : session.explored_paras) p.paras_explored += session.seen_paras.count(id);
  for (const auto& id : session.explored_refs) p.refs_explored += session.seen_refs.count(id);
  return p;
}

RankedPage rank_for_session(const Session& session, const std::vector<QueryCandidate>& pool,
                            const RefsByPara& refs, const RankingConfig& config) {
  std::vector<QueryCandidate> visible;
  visible.reserve(pool.size());
  for (const auto& c : pool) {
    if (session.show_explored || !session.explored_paras.count(c.para_id)) visible.push_back(c);
  }
  return mmr_rerank(visible, refs, session.explored_refs, config);
}

RankedPage rerank_on_update(const Session& session, const std::string& query,
                            const InvertedIndex& index, const RefsByPara& refs,
                            const RankingConfig& config) {
  if (std::find(session.queries.begin(), session.queries.end(), query) == session.queries.end()) {
    throw SessionError("session " + session.session_id + " has no query '" + query + "'");
  }
  return rank_for_session(session, index.search(query, config.pool_size), refs, config);
}

}  // namespace parascope
