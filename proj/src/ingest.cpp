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

#include "parascope/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "parascope/utf8.hpp"

namespace parascope {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional, std::string_view what) {
  if (!j.is_object()) throw CorpusError(std::string(what) + " is not an object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) {
      throw CorpusError(std::string(what) + " missing field '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, _] : j.items()) {
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw CorpusError(std::string(what) + " has unknown field '" + key + "'");
  }
}

Embedding parse_embedding(const json& j) {
  if (!j.is_array()) throw CorpusError("embedding is not an array");
  Embedding v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw CorpusError("embedding has a non-numeric entry");
    v.push_back(x.get<double>());
  }
  if (v.empty()) throw CorpusError("embedding is empty");
  return v;
}

RawParagraph parse_paragraph(const json& j) {
  require_keys(j, {"text", "mentions"}, {}, "paragraph");
  RawParagraph p;
  p.text = j.at("text").get<std::string>();
  if (trim(p.text).empty()) throw CorpusError("paragraph text is empty");
  const auto cp_len = utf8::length(p.text);
  for (const auto& m : j.at("mentions")) {
    require_keys(m, {"ref_paper_id", "start", "end"}, {}, "mention");
    const auto start = m.at("start").get<std::int64_t>();
    const auto end = m.at("end").get<std::int64_t>();
    if (start < 0 || end <= start || static_cast<std::size_t>(end) > cp_len) {
      throw CorpusError("mention offsets out of bounds");
    }
    RawMention rm;
    rm.ref_paper_id = m.at("ref_paper_id").get<std::string>();
    if (rm.ref_paper_id.empty()) throw CorpusError("mention has empty ref_paper_id");
    rm.span = {utf8::byte_offset(p.text, static_cast<std::size_t>(start)),
               utf8::byte_offset(p.text, static_cast<std::size_t>(end))};
    p.mentions.push_back(std::move(rm));
  }
  std::sort(p.mentions.begin(), p.mentions.end(),
            [](const RawMention& a, const RawMention& b) { return a.span < b.span; });
  for (std::size_t i = 1; i < p.mentions.size(); ++i) {
    if (p.mentions[i - 1].span.overlaps(p.mentions[i].span)) {
      throw CorpusError("overlapping mentions");
    }
  }
  return p;
}

// Merges sentences so that no mention straddles a boundary.
std::vector<Span> merge_around_mentions(std::vector<Span> sentences,
                                        const std::vector<ReferenceMention>& mentions) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& m : mentions) {
      for (std::size_t i = 0; i + 1 < sentences.size(); ++i) {
        const bool straddles = m.span.begin < sentences[i].end &&
                               m.span.end > sentences[i + 1].begin;
        const bool in_gap = m.span.begin >= sentences[i].end &&
                            m.span.end <= sentences[i + 1].begin;
        if (straddles || in_gap) {
          sentences[i].end = sentences[i + 1].end;
          sentences.erase(sentences.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          changed = true;
          break;
        }
      }
    }
  }
  return sentences;
}

void load_sidecar(Corpus& corpus, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot read embeddings sidecar: " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      const auto j = json::parse(line);
      require_keys(j, {"paper_id", "embedding"}, {}, "embedding row");
      const auto id = j.at("paper_id").get<std::string>();
      auto v = parse_embedding(j.at("embedding"));
      if (!corpus.embedding_dim) corpus.embedding_dim = v.size();
      if (v.size() != *corpus.embedding_dim) throw CorpusError("embedding dimension mismatch");
      auto it = corpus.papers.find(id);
      if (it != corpus.papers.end()) it->second.embedding = std::move(v);
    } catch (const std::exception& e) {
      throw CorpusError(path.filename().string() + " line " + std::to_string(line_no) +
                        ": malformed record: " + e.what());
    }
  }
}

}  // namespace

std::string last_name(std::string_view full_name) {
  auto name = trim(full_name);
  if (auto comma = name.find(','); comma != std::string_view::npos) {
    return std::string(trim(name.substr(0, comma)));
  }
  auto space = name.find_last_of(" \t");
  return std::string(space == std::string_view::npos ? name : name.substr(space + 1));
}

FormattedReference format_reference(const PaperRecord* paper) {
  if (paper == nullptr || paper->authors.empty() || paper->year <= 0) {
    return {std::string(kUnresolvedSurface), false};
  }
  const auto family = last_name(paper->authors.front());
  if (family.empty()) return {std::string(kUnresolvedSurface), false};
  std::ostringstream out;
  out << '(' << family;
  if (paper->authors.size() >= 2) out << " et al.";
  out << ", " << paper->year << ')';
  return {out.str(), true};
}

SelfReferences resolve_self_references(std::string_view text,
                                       const SelfReferenceMatcher& matcher) {
  return {std::string(text), matcher.find(text)};
}

std::vector<ParagraphRecord> extract_paragraphs(const PaperRecord& paper,
                                                const std::map<PaperId, PaperRecord>& papers,
                                                const SelfReferenceMatcher& matcher) {
  std::vector<ParagraphRecord> out;
  for (std::size_t s = 0; s < paper.sections.size(); ++s) {
    const auto& section = paper.sections[s];
    for (std::size_t k = 0; k < section.paragraphs.size(); ++k) {
      const auto& raw = section.paragraphs[k];
      std::set<PaperId> distinct;
      for (const auto& m : raw.mentions) distinct.insert(m.ref_paper_id);
      if (distinct.size() < kMinDistinctReferences) continue;

      ParagraphRecord para;
      para.para_id = paper.paper_id + ":" + std::to_string(s) + ":" + std::to_string(k);
      para.paper_id = paper.paper_id;
      para.raw_heading = section.heading;
      para.display_heading = section.heading;
      para.in_related_work = section.is_related_work;

      std::size_t cursor = 0;
      for (const auto& m : raw.mentions) {
        para.text.append(raw.text, cursor, m.span.begin - cursor);
        auto it = papers.find(m.ref_paper_id);
        const auto formatted = format_reference(it == papers.end() ? nullptr : &it->second);
        const std::size_t begin = para.text.size();
        para.text += formatted.surface_form;
        para.references.push_back({m.ref_paper_id, {begin, para.text.size()},
                                   formatted.surface_form, formatted.resolved});
        cursor = m.span.end;
      }
      para.text.append(raw.text, cursor, std::string::npos);

      para.self_ref_spans = resolve_self_references(para.text, matcher).spans;
      para.sentences = merge_around_mentions(segment_sentences(para.text), para.references);
      out.push_back(std::move(para));
    }
  }
  return out;
}

PaperRecord parse_paper_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw CorpusError(e.what());
  }
  try {
    require_keys(j,
                 {"paper_id", "title", "abstract", "authors", "year", "venue", "citation_count",
                  "sections"},
                 {"tldr", "embedding"}, "paper");
    PaperRecord p;
    p.paper_id = j.at("paper_id").get<std::string>();
    if (p.paper_id.empty()) throw CorpusError("empty paper_id");
    p.title = j.at("title").get<std::string>();
    p.abstract = j.at("abstract").get<std::string>();
    if (j.contains("tldr") && !j.at("tldr").is_null()) p.tldr = j.at("tldr").get<std::string>();
    p.authors = j.at("authors").get<std::vector<std::string>>();
    p.year = j.at("year").get<int>();
    if (p.year < 1900 || p.year > 2100) throw CorpusError("year out of range");
    p.venue = j.at("venue").get<std::string>();
    p.citation_count = j.at("citation_count").get<std::int64_t>();
    if (p.citation_count < 0) throw CorpusError("negative citation_count");
    if (j.contains("embedding") && !j.at("embedding").is_null()) {
      p.embedding = parse_embedding(j.at("embedding"));
    }
    for (const auto& sj : j.at("sections")) {
      require_keys(sj, {"heading", "is_related_work", "paragraphs"}, {}, "section");
      SectionRecord sec;
      sec.heading = sj.at("heading").get<std::string>();
      sec.is_related_work = sj.at("is_related_work").get<bool>();
      for (const auto& pj : sj.at("paragraphs")) sec.paragraphs.push_back(parse_paragraph(pj));
      p.sections.push_back(std::move(sec));
    }
    return p;
  } catch (const json::exception& e) {
    throw CorpusError(e.what());
  }
}

namespace {

Corpus finish_corpus(Corpus corpus, const IngestOptions& options) {
  corpus.stats = {};
  corpus.stats.papers_read = corpus.papers.size();

  if (options.embeddings_sidecar) load_sidecar(corpus, *options.embeddings_sidecar);

  for (const auto& [id, paper] : corpus.papers) {
    for (const auto& sec : paper.sections) corpus.stats.paragraphs_seen += sec.paragraphs.size();
    for (auto& para : extract_paragraphs(paper, corpus.papers, options.self_references)) {
      for (const auto& m : para.references) {
        if (!m.resolved) ++corpus.stats.unresolved_mentions;
        if (!corpus.papers.count(m.ref_paper_id)) corpus.unresolved_refs.insert(m.ref_paper_id);
      }
      corpus.paragraphs.emplace(para.para_id, std::move(para));
    }
  }
  corpus.stats.paragraphs_kept = corpus.paragraphs.size();
  corpus.stats.paragraphs_dropped = corpus.stats.paragraphs_seen - corpus.stats.paragraphs_kept;

  std::shared_ptr<const HeadingProvider> provider = options.heading_provider;
  if (!provider) {
    auto tfidf = std::make_shared<TfidfHeadingProvider>();
    for (const auto& [_, para] : corpus.paragraphs) tfidf->add(para);
    provider = std::move(tfidf);
  }
  for (auto& [_, para] : corpus.paragraphs) {
    auto [heading, source] = assign_display_heading(para, *provider);
    para.display_heading = std::move(heading);
    para.heading_source = source;
  }
  validate(corpus);
  return corpus;
}

}  // namespace

Corpus assemble_corpus(std::vector<PaperRecord> papers, const IngestOptions& options) {
  Corpus corpus;
  for (auto& p : papers) {
    if (p.embedding) {
      if (!corpus.embedding_dim) corpus.embedding_dim = p.embedding->size();
      if (p.embedding->size() != *corpus.embedding_dim) {
        throw CorpusError("paper " + p.paper_id + ": embedding dimension mismatch");
      }
    }
    const auto id = p.paper_id;
    if (!corpus.papers.emplace(id, std::move(p)).second) {
      throw CorpusError("duplicate paper_id " + id);
    }
  }
  return finish_corpus(std::move(corpus), options);
}

Corpus load_corpus_from_string(std::string_view contents, const IngestOptions& options) {
  Corpus corpus;
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    PaperRecord paper;
    try {
      paper = parse_paper_record(line);
      if (paper.embedding) {
        if (!corpus.embedding_dim) corpus.embedding_dim = paper.embedding->size();
        if (paper.embedding->size() != *corpus.embedding_dim) {
          throw CorpusError("embedding dimension mismatch");
        }
      }
    } catch (const CorpusError& e) {
      throw CorpusError("line " + std::to_string(line_no) + ": malformed record: " + e.what());
    }
    if (corpus.papers.count(paper.paper_id)) {
      throw CorpusError("line " + std::to_string(line_no) + ": duplicate paper_id " +
                        paper.paper_id);
    }
    corpus.papers.emplace(paper.paper_id, std::move(paper));
  }
  return finish_corpus(std::move(corpus), options);
}

Corpus load_corpus(const std::filesystem::path& path, const IngestOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_corpus_from_string(buf.str(), options);
}

}  // namespace parascope
