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

#include "parascope/corpus.hpp"

namespace parascope {

const char* to_string(HeadingSource s) {
  return s == HeadingSource::author ? "author" : "generated";
}

HeadingSource heading_source_from_string(const std::string& s) {
  if (s == "author") return HeadingSource::author;
  if (s == "generated") return HeadingSource::generated;
  throw CorpusError("unknown heading source: " + s);
}

std::vector<PaperId> ParagraphRecord::distinct_refs() const {
  std::vector<PaperId> out;
  std::set<PaperId> seen;
  for (const auto& m : references) {
    if (seen.insert(m.ref_paper_id).second) out.push_back(m.ref_paper_id);
  }
  return out;
}

std::set<PaperId> ParagraphRecord::ref_set() const {
  std::set<PaperId> out;
  for (const auto& m : references) out.insert(m.ref_paper_id);
  return out;
}

std::optional<std::size_t> ParagraphRecord::sentence_of(const Span& span) const {
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (sentences[i].contains(span)) return i;
  }
  return std::nullopt;
}

const PaperRecord* Corpus::find_paper(const PaperId& id) const {
  auto it = papers.find(id);
  return it == papers.end() ? nullptr : &it->second;
}

const ParagraphRecord* Corpus::find_paragraph(const ParaId& id) const {
  auto it = paragraphs.find(id);
  return it == paragraphs.end() ? nullptr : &it->second;
}

std::map<PaperId, std::vector<ParaId>> Corpus::citing_paragraphs() const {
  std::map<PaperId, std::vector<ParaId>> out;
  for (const auto& [pid, para] : paragraphs) {
    for (const auto& ref : para.distinct_refs()) out[ref].push_back(pid);
  }
  return out;
}

void validate(const Corpus& corpus) {
  for (const auto& [id, paper] : corpus.papers) {
    if (id != paper.paper_id) throw CorpusError("paper key mismatch: " + id);
    if (paper.year < 1900 || paper.year > 2100) {
      throw CorpusError("paper " + id + ": year out of range");
    }
    if (paper.embedding && corpus.embedding_dim &&
        paper.embedding->size() != *corpus.embedding_dim) {
      throw CorpusError("paper " + id + ": embedding dimension mismatch");
    }
  }
  for (const auto& [id, para] : corpus.paragraphs) {
    if (!corpus.papers.count(para.paper_id)) {
      throw CorpusError("paragraph " + id + ": unknown source paper");
    }
    if (para.distinct_refs().size() < 3) {
      throw CorpusError("paragraph " + id + ": fewer than three distinct references");
    }
    if (para.display_heading.empty()) {
      throw CorpusError("paragraph " + id + ": empty display heading");
    }
    for (std::size_t i = 0; i < para.sentences.size(); ++i) {
      const auto& s = para.sentences[i];
      if (s.empty() || s.end > para.text.size() ||
          (i > 0 && para.sentences[i - 1].end > s.begin)) {
        throw CorpusError("paragraph " + id + ": bad sentence intervals");
      }
    }
    for (std::size_t i = 0; i < para.references.size(); ++i) {
      const auto& m = para.references[i];
      if (m.span.end > para.text.size()) {
        throw CorpusError("paragraph " + id + ": mention out of bounds");
      }
      for (std::size_t j = i + 1; j < para.references.size(); ++j) {
        if (m.span.overlaps(para.references[j].span)) {
          throw CorpusError("paragraph " + id + ": overlapping mentions");
        }
      }
      if (!para.sentence_of(m.span)) {
        throw CorpusError("paragraph " + id + ": mention crosses a sentence boundary");
      }
      const bool known = corpus.papers.count(m.ref_paper_id) > 0;
      if (!known && !corpus.unresolved_refs.count(m.ref_paper_id)) {
        throw CorpusError("paragraph " + id + ": dangling reference " + m.ref_paper_id);
      }
    }
  }
}

}  // namespace parascope
