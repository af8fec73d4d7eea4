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

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parascope/corpus.hpp"

namespace parascope {

class IndexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;

  bool operator==(const Bm25Params&) const = default;
};

struct Posting {
  ParaId para_id;
  std::size_t term_frequency = 0;

  bool operator==(const Posting&) const = default;
};

struct QueryCandidate {
  ParaId para_id;
  double bm25 = 0.0;

  bool operator==(const QueryCandidate&) const = default;
};

struct IndexDocument {
  ParaId para_id;
  std::string text;
};

/// Okapi BM25 over paragraphs. Immutable after construction; all queries are
/// const and safe to run concurrently.
class InvertedIndex {
 public:
  InvertedIndex() = default;

  // Throws IndexError on an empty document list or a repeated para_id.
  static InvertedIndex build(const std::vector<IndexDocument>& docs, Bm25Params params = {});

  const std::map<std::string, std::vector<Posting>>& postings() const { return postings_; }
  const std::map<ParaId, std::size_t>& doc_lengths() const { return doc_lengths_; }
  const std::map<std::string, std::size_t>& doc_freq() const { return doc_freq_; }
  double avg_doc_length() const { return avg_doc_length_; }
  std::size_t doc_count() const { return doc_lengths_.size(); }
  const Bm25Params& params() const { return params_; }

  // ln(1 + (N - df + 0.5) / (df + 0.5)); zero for unindexed terms.
  double idf(const std::string& term) const;
  std::size_t term_frequency(const std::string& term, const ParaId& para_id) const;

  // Query terms are treated as a set. Throws IndexError for unknown para_id.
  double bm25_score(const std::vector<std::string>& query_terms, const ParaId& para_id) const;

  /// Top `pool_size` paragraphs by score (desc), ties by para_id (asc).
  /// Zero-score documents are never returned.
  std::vector<QueryCandidate> search(std::string_view query, std::size_t pool_size) const;

  void save(const std::filesystem::path& path) const;
  static InvertedIndex load(const std::filesystem::path& path);

  bool operator==(const InvertedIndex&) const = default;

 private:
  double term_weight(double idf, std::size_t tf, std::size_t doc_len) const;

  std::map<std::string, std::vector<Posting>> postings_;
  std::map<ParaId, std::size_t> doc_lengths_;
  std::map<std::string, std::size_t> doc_freq_;
  double avg_doc_length_ = 0.0;
  Bm25Params params_;
};

// Indexed text is the display heading followed by the paragraph body.
std::vector<IndexDocument> index_documents(const Corpus& corpus);
InvertedIndex build_index(const Corpus& corpus, Bm25Params params = {});

}  // namespace parascope
