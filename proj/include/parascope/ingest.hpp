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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parascope/corpus.hpp"
#include "parascope/headings.hpp"
#include "parascope/text.hpp"

namespace parascope {

inline constexpr std::size_t kMinDistinctReferences = 3;

struct IngestOptions {
  SelfReferenceMatcher self_references;
  // Optional JSONL sidecar of {"paper_id", "embedding"} rows.
  std::optional<std::filesystem::path> embeddings_sidecar;
  // When null, a TfidfHeadingProvider fitted on the extracted paragraphs is used.
  std::shared_ptr<const HeadingProvider> heading_provider;
};

struct FormattedReference {
  std::string surface_form;
  bool resolved = true;
};

inline constexpr std::string_view kUnresolvedSurface = "[unresolved]";

/// APA-style in-text form: "(Smith, 2019)" or "(Smith et al., 2020)".
/// `paper` may be null for references with no metadata.
FormattedReference format_reference(const PaperRecord* paper);

// Family name of a full name: "Jane Smith" -> "Smith", "Smith, Jane" -> "Smith".
std::string last_name(std::string_view full_name);

struct SelfReferences {
  std::string text;
  std::vector<Span> spans;
};

// Annotates self-referencing phrases; the text is returned unchanged.
SelfReferences resolve_self_references(std::string_view text,
                                       const SelfReferenceMatcher& matcher);

/// Paragraphs of `paper` citing at least three distinct papers, in document
/// order, with citations rewritten to their APA surface form. Headings are
/// left for assign_display_heading; display_heading holds the raw heading.
std::vector<ParagraphRecord> extract_paragraphs(const PaperRecord& paper,
                                                const std::map<PaperId, PaperRecord>& papers,
                                                const SelfReferenceMatcher& matcher);

// Parses one corpus line. Offsets in the file are code points; the result
// holds byte offsets. Throws CorpusError without line information.
PaperRecord parse_paper_record(std::string_view line);

// Runs extraction, heading assignment and validation over parsed papers.
Corpus assemble_corpus(std::vector<PaperRecord> papers, const IngestOptions& options = {});

Corpus load_corpus(const std::filesystem::path& path, const IngestOptions& options = {});
Corpus load_corpus_from_string(std::string_view contents, const IngestOptions& options = {});

}  // namespace parascope
