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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parascope/text.hpp"

namespace parascope {

using PaperId = std::string;
using ParaId = std::string;
using Embedding = std::vector<double>;

/// Raised for any violation of the corpus file contract. The message names
/// the offending line when one is known.
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A citation as it appears in the input file, before reformatting. Offsets
// are bytes into the raw paragraph text.
struct RawMention {
  PaperId ref_paper_id;
  Span span;

  bool operator==(const RawMention&) const = default;
};

struct RawParagraph {
  std::string text;
  std::vector<RawMention> mentions;

  bool operator==(const RawParagraph&) const = default;
};

struct SectionRecord {
  std::string heading;
  bool is_related_work = false;
  std::vector<RawParagraph> paragraphs;

  bool operator==(const SectionRecord&) const = default;
};

struct PaperRecord {
  PaperId paper_id;
  std::string title;
  std::string abstract;
  std::optional<std::string> tldr;
  std::vector<std::string> authors;
  int year = 0;
  std::string venue;
  std::int64_t citation_count = 0;
  std::optional<Embedding> embedding;
  std::vector<SectionRecord> sections;

  bool operator==(const PaperRecord&) const = default;
};

struct ReferenceMention {
  PaperId ref_paper_id;
  Span span;  // into ParagraphRecord::text
  std::string surface_form;
  bool resolved = true;

  bool operator==(const ReferenceMention&) const = default;
};

enum class HeadingSource { author, generated };

const char* to_string(HeadingSource s);
HeadingSource heading_source_from_string(const std::string& s);

struct ParagraphRecord {
  ParaId para_id;
  PaperId paper_id;
  std::string raw_heading;
  std::string display_heading;
  HeadingSource heading_source = HeadingSource::author;
  std::string text;
  std::vector<Span> sentences;
  std::vector<ReferenceMention> references;
  std::vector<Span> self_ref_spans;
  bool in_related_work = false;

  // Distinct referenced paper ids in first-mention order.
  std::vector<PaperId> distinct_refs() const;
  std::set<PaperId> ref_set() const;

  // Index of the sentence containing `span`, if any.
  std::optional<std::size_t> sentence_of(const Span& span) const;

  bool operator==(const ParagraphRecord&) const = default;
};

struct IngestStats {
  std::size_t papers_read = 0;
  std::size_t paragraphs_seen = 0;
  std::size_t paragraphs_kept = 0;
  std::size_t paragraphs_dropped = 0;
  std::size_t unresolved_mentions = 0;

  bool operator==(const IngestStats&) const = default;
};

/// Papers and extracted paragraphs. Immutable once built.
struct Corpus {
  std::map<PaperId, PaperRecord> papers;
  std::map<ParaId, ParagraphRecord> paragraphs;
  std::optional<std::size_t> embedding_dim;
  // Referenced ids with no PaperRecord; kept as unresolved stubs.
  std::set<PaperId> unresolved_refs;
  IngestStats stats;

  const PaperRecord* find_paper(const PaperId& id) const;
  const ParagraphRecord* find_paragraph(const ParaId& id) const;

  // paper id -> paragraphs citing it, ascending para id.
  std::map<PaperId, std::vector<ParaId>> citing_paragraphs() const;

  bool operator==(const Corpus&) const = default;
};

// Throws CorpusError describing the first violated invariant.
void validate(const Corpus& corpus);

}  // namespace parascope
