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

#include "parascope/corpus_io.hpp"

#include <fstream>

namespace parascope {

using nlohmann::json;

namespace {

json span_json(const Span& s) { return json::array({s.begin, s.end}); }
Span span_from(const json& j) { return {j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>()}; }

json spans_json(const std::vector<Span>& spans) {
  json a = json::array();
  for (const auto& s : spans) a.push_back(span_json(s));
  return a;
}

std::vector<Span> spans_from(const json& j) {
  std::vector<Span> out;
  for (const auto& s : j) out.push_back(span_from(s));
  return out;
}

json paper_json(const PaperRecord& p) {
  json j = {{"paper_id", p.paper_id}, {"title", p.title},     {"abstract", p.abstract},
            {"authors", p.authors},   {"year", p.year},       {"venue", p.venue},
            {"citation_count", p.citation_count}};
  if (p.tldr) j["tldr"] = *p.tldr;
  if (p.embedding) j["embedding"] = *p.embedding;
  json sections = json::array();
  for (const auto& s : p.sections) {
    json paras = json::array();
    for (const auto& rp : s.paragraphs) {
      json mentions = json::array();
      for (const auto& m : rp.mentions) {
        mentions.push_back({{"ref_paper_id", m.ref_paper_id}, {"span", span_json(m.span)}});
      }
      paras.push_back({{"text", rp.text}, {"mentions", mentions}});
    }
    sections.push_back(
        {{"heading", s.heading}, {"is_related_work", s.is_related_work}, {"paragraphs", paras}});
  }
  j["sections"] = sections;
  return j;
}

PaperRecord paper_from(const json& j) {
  PaperRecord p;
  p.paper_id = j.at("paper_id").get<std::string>();
  p.title = j.at("title").get<std::string>();
  p.abstract = j.at("abstract").get<std::string>();
  p.authors = j.at("authors").get<std::vector<std::string>>();
  p.year = j.at("year").get<int>();
  p.venue = j.at("venue").get<std::string>();
  p.citation_count = j.at("citation_count").get<std::int64_t>();
  if (j.contains("tldr")) p.tldr = j.at("tldr").get<std::string>();
  if (j.contains("embedding")) p.embedding = j.at("embedding").get<Embedding>();
  for (const auto& sj : j.at("sections")) {
    SectionRecord s;
    s.heading = sj.at("heading").get<std::string>();
    s.is_related_work = sj.at("is_related_work").get<bool>();
    for (const auto& pj : sj.at("paragraphs")) {
      RawParagraph rp;
      rp.text = pj.at("text").get<std::string>();
      for (const auto& mj : pj.at("mentions")) {
        rp.mentions.push_back({mj.at("ref_paper_id").get<std::string>(), span_from(mj.at("span"))});
      }
      s.paragraphs.push_back(std::move(rp));
    }
    p.sections.push_back(std::move(s));
  }
  return p;
}

json paragraph_json(const ParagraphRecord& p) {
  json refs = json::array();
  for (const auto& m : p.references) {
    refs.push_back({{"ref_paper_id", m.ref_paper_id},
                    {"span", span_json(m.span)},
                    {"surface_form", m.surface_form},
                    {"resolved", m.resolved}});
  }
  return {{"para_id", p.para_id},
          {"paper_id", p.paper_id},
          {"raw_heading", p.raw_heading},
          {"display_heading", p.display_heading},
          {"heading_source", to_string(p.heading_source)},
          {"text", p.text},
          {"sentences", spans_json(p.sentences)},
          {"references", refs},
          {"self_ref_spans", spans_json(p.self_ref_spans)},
          {"in_related_work", p.in_related_work}};
}

ParagraphRecord paragraph_from(const json& j) {
  ParagraphRecord p;
  p.para_id = j.at("para_id").get<std::string>();
  p.paper_id = j.at("paper_id").get<std::string>();
  p.raw_heading = j.at("raw_heading").get<std::string>();
  p.display_heading = j.at("display_heading").get<std::string>();
  p.heading_source = heading_source_from_string(j.at("heading_source").get<std::string>());
  p.text = j.at("text").get<std::string>();
  p.sentences = spans_from(j.at("sentences"));
  for (const auto& mj : j.at("references")) {
    p.references.push_back({mj.at("ref_paper_id").get<std::string>(), span_from(mj.at("span")),
                            mj.at("surface_form").get<std::string>(),
                            mj.at("resolved").get<bool>()});
  }
  p.self_ref_spans = spans_from(j.at("self_ref_spans"));
  p.in_related_work = j.at("in_related_work").get<bool>();
  return p;
}

}  // namespace

json corpus_to_json(const Corpus& corpus) {
  json papers = json::array();
  for (const auto& [_, p] : corpus.papers) papers.push_back(paper_json(p));
  json paragraphs = json::array();
  for (const auto& [_, p] : corpus.paragraphs) paragraphs.push_back(paragraph_json(p));
  json j = {{"papers", papers},
            {"paragraphs", paragraphs},
            {"unresolved_refs", corpus.unresolved_refs},
            {"stats",
             {{"papers_read", corpus.stats.papers_read},
              {"paragraphs_seen", corpus.stats.paragraphs_seen},
              {"paragraphs_kept", corpus.stats.paragraphs_kept},
              {"paragraphs_dropped", corpus.stats.paragraphs_dropped},
              {"unresolved_mentions", corpus.stats.unresolved_mentions}}}};
  j["embedding_dim"] = corpus.embedding_dim ? json(*corpus.embedding_dim) : json(nullptr);
  return j;
}

Corpus corpus_from_json(const json& j) {
  Corpus c;
  for (const auto& pj : j.at("papers")) {
    auto p = paper_from(pj);
    c.papers.emplace(p.paper_id, std::move(p));
  }
  for (const auto& pj : j.at("paragraphs")) {
    auto p = paragraph_from(pj);
    c.paragraphs.emplace(p.para_id, std::move(p));
  }
  c.unresolved_refs = j.at("unresolved_refs").get<std::set<PaperId>>();
  const auto& s = j.at("stats");
  c.stats.papers_read = s.at("papers_read").get<std::size_t>();
  c.stats.paragraphs_seen = s.at("paragraphs_seen").get<std::size_t>();
  c.stats.paragraphs_kept = s.at("paragraphs_kept").get<std::size_t>();
  c.stats.paragraphs_dropped = s.at("paragraphs_dropped").get<std::size_t>();
  c.stats.unresolved_mentions = s.at("unresolved_mentions").get<std::size_t>();
  if (!j.at("embedding_dim").is_null()) c.embedding_dim = j.at("embedding_dim").get<std::size_t>();
  return c;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CorpusError("cannot write " + path.string());
  out << corpus_to_json(corpus).dump() << '\n';
}

Corpus load_processed_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read " + path.string());
  try {
    auto c = corpus_from_json(json::parse(in));
    validate(c);
    return c;
  } catch (const json::exception& e) {
    throw CorpusError(path.string() + ": " + e.what());
  }
}

}  // namespace parascope
