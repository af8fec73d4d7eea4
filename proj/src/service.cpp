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

#include "parascope/service.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "parascope/text.hpp"
#include "parascope/utf8.hpp"

namespace parascope {

using nlohmann::json;

namespace {

json span_cp(const std::string& text, const Span& s) {
  return json::array({utf8::codepoint_offset(text, s.begin), utf8::codepoint_offset(text, s.end)});
}

const char* status_code_name(int status) {
  switch (status) {
    case 400: return "bad_request";
    case 404: return "not_found";
    case 503: return "unavailable";
    default: return "internal_error";
  }
}

json reference_card(const PaperRecord& p) {
  json j = {{"paper_id", p.paper_id}, {"title", p.title},   {"abstract", p.abstract},
            {"authors", p.authors},   {"year", p.year},     {"venue", p.venue},
            {"citation_count", p.citation_count}};
  if (p.tldr) j["tldr"] = *p.tldr;
  return j;
}

}  // namespace

ApiResponse error_response(int status, const std::string& message) {
  return {status, {{"code", status_code_name(status)}, {"message", message}}};
}

json progress_json(const ProgressSnapshot& p) {
  return {{"paras_explored", p.paras_explored},
          {"paras_total", p.paras_total},
          {"refs_explored", p.refs_explored},
          {"refs_total", p.refs_total}};
}

json decoration_json(const ParagraphDecoration& d, const ParagraphRecord& p) {
  json highlights = json::array();
  for (const auto& [mention, intensity] : d.highlights) {
    highlights.push_back({{"mention", mention}, {"intensity", intensity}});
  }
  json self_refs = json::array();
  for (const auto& s : d.self_ref_spans) self_refs.push_back(span_cp(p.text, s));
  json timeline = {{"years", d.timeline}};
  if (d.timeline_range) {
    timeline["min_year"] = d.timeline_range->min_year;
    timeline["max_year"] = d.timeline_range->max_year;
  }
  return {{"unexplored_count", d.unexplored_count},
          {"lowlit_sentences", d.lowlit_sentences},
          {"highlights", highlights},
          {"citation_freq", d.citation_freq},
          {"timeline", timeline},
          {"self_ref_spans", self_refs},
          {"explored", d.explored}};
}

std::string random_session_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream out;
  out << std::hex;
  for (int i = 0; i < 2; ++i) {
    out.width(16);
    out.fill('0');
    out << rng();
  }
  return out.str();
}

Service::Service(IndexBundle bundle, Options options)
    : bundle_(std::move(bundle)),
      options_(std::move(options)),
      refs_(refs_by_paragraph(bundle_.corpus)),
      citing_(bundle_.corpus.citing_paragraphs()),
      embeddings_(bundle_.corpus),
      store_(options_.event_log_dir) {
  options_.ranking.validate();
  options_.similarity.validate();
  if (!options_.new_session_id) options_.new_session_id = random_session_id;
  if (!options_.clock) options_.clock = utc_timestamp_now;
  for (const auto& id : store_.sessions()) {
    auto slot = std::make_shared<Slot>();
    slot->session = replay(id, store_.read(id), bundle_.corpus);
    slot->sink = std::make_unique<FileEventSink>(store_.path_for(id));
    sessions_.emplace(id, std::move(slot));
  }
}

std::shared_ptr<Service::Slot> Service::find_slot(const std::string& id) {
  std::shared_lock lock(sessions_mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void Service::append(Slot& slot, EventKind kind, json payload) {
  EventRecord e;
  e.timestamp = options_.clock();
  const auto& events = slot.session.events;
  if (!events.empty() && e.timestamp < events.back().timestamp) {
    e.timestamp = events.back().timestamp;
  }
  e.session_id = slot.session.session_id;
  e.kind = kind;
  e.payload = std::move(payload);
  record_event(slot.session, e, bundle_.corpus, slot.sink.get());
}

std::vector<const ParagraphRecord*> Service::paragraphs_of(const std::vector<ParaId>& ids) const {
  std::vector<const ParagraphRecord*> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(&bundle_.corpus.paragraphs.at(id));
  return out;
}

json Service::entry_json(const ParagraphRecord& p, const ParagraphDecoration& d) const {
  json refs = json::array();
  for (const auto& m : p.references) {
    json r = {{"paper_id", m.ref_paper_id},
              {"start", utf8::codepoint_offset(p.text, m.span.begin)},
              {"end", utf8::codepoint_offset(p.text, m.span.end)},
              {"surface_form", m.surface_form},
              {"resolved", m.resolved}};
    if (const auto* paper = bundle_.corpus.find_paper(m.ref_paper_id)) {
      r["title"] = paper->title;
      r["year"] = paper->year;
    }
    refs.push_back(std::move(r));
  }
  json sentences = json::array();
  for (const auto& s : p.sentences) sentences.push_back(span_cp(p.text, s));
  return {{"para_id", p.para_id},
          {"paper_id", p.paper_id},
          {"display_heading", p.display_heading},
          {"heading_source", to_string(p.heading_source)},
          {"in_related_work", p.in_related_work},
          {"text", p.text},
          {"sentences", sentences},
          {"references", refs},
          {"decoration", decoration_json(d, p)}};
}

ApiResponse Service::create_session() {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto id = options_.new_session_id();
    {
      std::shared_lock lock(sessions_mu_);
      if (sessions_.count(id)) continue;
    }
    try {
      store_.create(id);
      auto slot = std::make_shared<Slot>();
      slot->session.session_id = id;
      slot->sink = std::make_unique<FileEventSink>(store_.path_for(id));
      std::unique_lock lock(sessions_mu_);
      sessions_.emplace(id, std::move(slot));
      return {201, {{"session_id", id}}};
    } catch (const StorageError& e) {
      if (std::filesystem::exists(store_.path_for(id))) continue;
      return error_response(503, e.what());
    }
  }
  return error_response(503, "could not allocate a session id");
}

ApiResponse Service::search(const std::optional<std::string>& q,
                            const std::optional<std::string>& session_id) {
  if (!session_id) return error_response(400, "missing session_id");
  const auto query = q ? std::string(trim(*q)) : std::string();
  if (query.empty()) return error_response(400, "empty query");
  auto slot = find_slot(*session_id);
  if (!slot) return error_response(404, "unknown session " + *session_id);

  std::lock_guard lock(slot->mu);
  const auto pool = bundle_.index.search(query, options_.ranking.pool_size);
  const auto page = rank_for_session(slot->session, pool, refs_, options_.ranking);

  std::vector<ParaId> ids;
  for (const auto& e : page.entries) ids.push_back(e.para_id);
  try {
    append(*slot, EventKind::query, {{"q", query}, {"page", ids}});
  } catch (const StorageError& e) {
    return error_response(503, e.what());
  }

  const auto current = paragraphs_of(ids);
  json entries = json::array();
  for (std::size_t i = 0; i < page.entries.size(); ++i) {
    const auto& r = page.entries[i];
    const auto& p = *current[i];
    auto d = decorate(p, slot->session, current, bundle_.corpus, embeddings_, options_.similarity);
    auto e = entry_json(p, d);
    e["rank"] = i + 1;
    e["scores"] = {{"bm25", r.bm25}, {"novelty", r.novelty}, {"score", r.score}};
    entries.push_back(std::move(e));
  }
  return {200,
          {{"session_id", *session_id},
           {"query", query},
           {"entries", entries},
           {"progress", progress_json(progress(slot->session))}}};
}

ApiResponse Service::similar(const std::string& para_id,
                             const std::optional<std::string>& session_id) {
  const auto* selected = bundle_.corpus.find_paragraph(para_id);
  if (!selected) return error_response(404, "unknown paragraph " + para_id);
  if (!session_id) return error_response(400, "missing session_id");
  auto slot = find_slot(*session_id);
  if (!slot) return error_response(404, "unknown session " + *session_id);

  std::lock_guard lock(slot->mu);
  const auto& session = slot->session;

  // Candidate pool: the latest query's BM25 pool plus every paragraph that
  // shares a reference with the selected one.
  std::set<ParaId> pool_ids;
  if (!session.queries.empty()) {
    for (const auto& c : bundle_.index.search(session.queries.back(), options_.ranking.pool_size)) {
      pool_ids.insert(c.para_id);
    }
  }
  for (const auto& ref : selected->distinct_refs()) {
    if (auto it = citing_.find(ref); it != citing_.end()) {
      pool_ids.insert(it->second.begin(), it->second.end());
    }
  }
  std::vector<const ParagraphRecord*> pool;
  for (const auto& id : pool_ids) {
    if (id == para_id) continue;
    if (!session.show_explored && session.explored_paras.count(id)) continue;
    pool.push_back(&bundle_.corpus.paragraphs.at(id));
  }
  const auto ranked = similar_paragraphs(*selected, pool, embeddings_, options_.similarity);

  std::vector<ParaId> ids;
  for (const auto& e : ranked) ids.push_back(e.para_id);
  try {
    append(*slot, EventKind::open_similar, {{"para_id", para_id}, {"results", ids}});
  } catch (const StorageError& e) {
    return error_response(503, e.what());
  }

  auto current = paragraphs_of(ids);
  current.insert(current.begin(), selected);
  const auto& s = slot->session;
  const auto& cfg = options_.similarity;
  json entries = json::array();
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& p = *current[i + 1];
    auto e = entry_json(p, decorate(p, s, current, bundle_.corpus, embeddings_, cfg));
    e["rank"] = i + 1;
    e["shared_refs"] = ranked[i].shared;
    e["affinity"] = std::isinf(ranked[i].affinity) ? json(nullptr) : json(ranked[i].affinity);
    entries.push_back(std::move(e));
  }
  return {200,
          {{"session_id", *session_id},
           {"selected", entry_json(*selected, decorate(*selected, s, current, bundle_.corpus,
                                                       embeddings_, cfg))},
           {"entries", entries},
           {"progress", progress_json(progress(s))}}};
}

ApiResponse Service::paragraph_paper(const std::string& para_id) const {
  const auto* p = bundle_.corpus.find_paragraph(para_id);
  if (!p) return error_response(404, "unknown paragraph " + para_id);
  const auto& paper = bundle_.corpus.papers.at(p->paper_id);
  json sections = json::array();
  for (const auto& s : paper.sections) {
    json paras = json::array();
    for (const auto& rp : s.paragraphs) paras.push_back(rp.text);
    sections.push_back(
        {{"heading", s.heading}, {"is_related_work", s.is_related_work}, {"paragraphs", paras}});
  }
  return {200,
          {{"paper_id", paper.paper_id},
           {"title", paper.title},
           {"para_id", para_id},
           {"sections", sections}}};
}

ApiResponse Service::paper(const std::string& paper_id) const {
  const auto* p = bundle_.corpus.find_paper(paper_id);
  if (!p) return error_response(404, "unknown paper " + paper_id);
  return {200, reference_card(*p)};
}

ApiResponse Service::post_event(const std::string& session_id, const std::string& body) {
  auto slot = find_slot(session_id);
  if (!slot) return error_response(404, "unknown session " + session_id);

  json request;
  try {
    request = json::parse(body);
  } catch (const json::exception&) {
    return error_response(400, "body is not valid JSON");
  }
  if (!request.is_object() || !request.contains("kind") || !request["kind"].is_string()) {
    return error_response(400, "body must be an object with a string 'kind'");
  }
  for (const auto& [key, _] : request.items()) {
    if (key != "kind" && key != "payload") return error_response(400, "unknown field " + key);
  }
  const auto kind = event_kind_from_string(request["kind"].get<std::string>());
  if (!kind) return error_response(400, "unknown event kind");
  // Queries and similar-views are logged by the server when served.
  if (*kind == EventKind::query || *kind == EventKind::open_similar) {
    return error_response(400, std::string(to_string(*kind)) + " events are server-generated");
  }
  json payload = request.value("payload", json::object());

  std::lock_guard lock(slot->mu);
  try {
    append(*slot, *kind, std::move(payload));
  } catch (const SessionError& e) {
    return error_response(400, e.what());
  } catch (const StorageError& e) {
    return error_response(503, e.what());
  }
  const bool refetch =
      *kind == EventKind::mark_paragraph_explored || *kind == EventKind::toggle_show_explored;
  return {200, {{"progress", progress_json(progress(slot->session))}, {"refetch", refetch}}};
}

ApiResponse Service::session_progress(const std::string& session_id) {
  auto slot = find_slot(session_id);
  if (!slot) return error_response(404, "unknown session " + session_id);
  std::lock_guard lock(slot->mu);
  return {200, {{"session_id", session_id}, {"progress", progress_json(progress(slot->session))}}};
}

std::optional<Session> Service::snapshot(const std::string& session_id) {
  auto slot = find_slot(session_id);
  if (!slot) return std::nullopt;
  std::lock_guard lock(slot->mu);
  return slot->session;
}

}  // namespace parascope
