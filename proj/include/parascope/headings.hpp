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
#include <string>
#include <utility>
#include <vector>

#include "parascope/corpus.hpp"

namespace parascope {

inline constexpr std::size_t kMaxHeadingWords = 12;

/// Produces a heading for paragraphs whose author heading is not
/// descriptive. Returning std::nullopt (or throwing) signals failure.
class HeadingProvider {
 public:
  virtual ~HeadingProvider() = default;
  virtual std::optional<std::string> generate(const ParagraphRecord& paragraph) const = 0;
};

// A contiguous run of content words, lowercased and space-joined.
struct Phrase {
  std::string text;
  std::size_t first_offset = 0;
};

// Bigrams and trigrams of content words. N-grams never cross a sentence
// boundary, a citation, a self-reference, punctuation, or a stopword.
std::vector<Phrase> candidate_ngrams(const ParagraphRecord& paragraph);

const std::vector<std::string>& stopwords();
bool is_stopword(const std::string& term);

/// Default provider: the paragraph's highest TF-IDF bigram or trigram, with
/// document frequencies counted over the fitted paragraphs. Ties go to the
/// earliest occurrence, then to the lexicographically smaller phrase.
class TfidfHeadingProvider : public HeadingProvider {
 public:
  TfidfHeadingProvider() = default;

  template <typename Range>
  explicit TfidfHeadingProvider(const Range& paragraphs) {
    for (const auto& p : paragraphs) add(p);
  }

  void add(const ParagraphRecord& paragraph);
  double idf(const std::string& phrase) const;
  std::optional<std::string> generate(const ParagraphRecord& paragraph) const override;

 private:
  std::map<std::string, std::size_t> doc_freq_;
  std::size_t doc_count_ = 0;
};

std::string title_case(const std::string& lowercase_words);

// Longest run of content words in the first sentence, title-cased; never
// empty for non-empty text.
std::string salient_phrase_of_first_sentence(const ParagraphRecord& paragraph);

std::pair<std::string, HeadingSource> assign_display_heading(
    const ParagraphRecord& paragraph, const HeadingProvider& provider);

}  // namespace parascope
