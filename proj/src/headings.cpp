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

#include "parascope/headings.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace parascope {

namespace {

bool all_digits(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool joins_phrase(std::string_view gap) {
  return std::all_of(gap.begin(), gap.end(), [](unsigned char c) {
    return std::isspace(c) || c == '-';
  });
}

std::size_t word_count(std::string_view s) {
  std::size_t n = 0;
  bool in_word = false;
  for (unsigned char c : s) {
    const bool space = std::isspace(c) != 0;
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

// Runs of content tokens that may be joined into phrases.
std::vector<std::vector<Token>> content_runs(const ParagraphRecord& p,
                                             std::optional<std::size_t> only_sentence) {
  std::vector<Span> blocked;
  for (const auto& m : p.references) blocked.push_back(m.span);
  blocked.insert(blocked.end(), p.self_ref_spans.begin(), p.self_ref_spans.end());

  std::vector<std::vector<Token>> runs;
  std::vector<Token> run;
  std::optional<std::size_t> run_sentence;
  auto flush = [&] {
    if (!run.empty()) runs.push_back(std::move(run));
    run.clear();
  };

  for (auto& tok : tokenize_with_spans(p.text)) {
    const auto sentence = p.sentence_of(tok.span);
    if (only_sentence && sentence != only_sentence) {
      flush();
      continue;
    }
    const bool is_blocked = std::any_of(blocked.begin(), blocked.end(),
                                        [&](const Span& b) { return b.overlaps(tok.span); });
    if (is_blocked || is_stopword(tok.term) || all_digits(tok.term)) {
      flush();
      continue;
    }
    if (!run.empty()) {
      const auto gap = std::string_view(p.text).substr(
          run.back().span.end, tok.span.begin - run.back().span.end);
      if (!joins_phrase(gap) || sentence != run_sentence) flush();
    }
    run_sentence = sentence;
    run.push_back(std::move(tok));
  }
  flush();
  return runs;
}

}  // namespace

const std::vector<std::string>& stopwords() {
  static const std::vector<std::string> words = {
      "about", "above", "after", "again", "all", "also", "an", "and", "any", "are",
      "as", "at", "be", "been", "before", "being", "between", "both", "but", "by",
      "can", "could", "did", "do", "does", "doing", "during", "each", "et", "al",
      "few", "for", "from", "further", "had", "has", "have", "having", "he", "her",
      "here", "hers", "him", "his", "how", "however", "if", "in", "into", "is",
      "it", "its", "itself", "may", "me", "might", "more", "most", "much", "must",
      "my", "no", "nor", "not", "of", "off", "on", "once", "only", "or", "other",
      "our", "ours", "out", "over", "own", "same", "she", "should", "so", "some",
      "such", "than", "that", "the", "their", "theirs", "them", "then", "there",
      "these", "they", "this", "those", "through", "thus", "to", "too", "under",
      "until", "up", "upon", "us", "used", "using", "very", "was", "we", "were",
      "what", "when", "where", "which", "while", "who", "whom", "why", "will",
      "with", "within", "without", "would", "you", "your", "e.g", "eg", "ie",
      "many", "several", "work", "works", "prior", "previous", "recent", "recently",
      "proposed", "propose", "studies", "study", "shown", "show", "shows"};
  return words;
}

bool is_stopword(const std::string& term) {
  static const std::set<std::string> set(stopwords().begin(), stopwords().end());
  return set.count(term) > 0;
}

std::vector<Phrase> candidate_ngrams(const ParagraphRecord& paragraph) {
  std::vector<Phrase> out;
  for (const auto& run : content_runs(paragraph, std::nullopt)) {
    for (std::size_t n = 2; n <= 3; ++n) {
      for (std::size_t i = 0; i + n <= run.size(); ++i) {
        std::string text = run[i].term;
        for (std::size_t k = 1; k < n; ++k) text += " " + run[i + k].term;
        out.push_back({std::move(text), run[i].span.begin});
      }
    }
  }
  return out;
}

void TfidfHeadingProvider::add(const ParagraphRecord& paragraph) {
  std::set<std::string> unique;
  for (auto& ph : candidate_ngrams(paragraph)) unique.insert(std::move(ph.text));
  for (const auto& g : unique) ++doc_freq_[g];
  ++doc_count_;
}

double TfidfHeadingProvider::idf(const std::string& phrase) const {
  auto it = doc_freq_.find(phrase);
  const double df = it == doc_freq_.end() ? 0.0 : static_cast<double>(it->second);
  const double n = static_cast<double>(doc_count_);
  return std::log((1.0 + n) / (1.0 + df)) + 1.0;
}

std::optional<std::string> TfidfHeadingProvider::generate(const ParagraphRecord& paragraph) const {
  struct Stat {
    std::size_t tf = 0;
    std::size_t first = 0;
  };
  std::map<std::string, Stat> stats;
  for (const auto& ph : candidate_ngrams(paragraph)) {
    auto [it, fresh] = stats.try_emplace(ph.text, Stat{0, ph.first_offset});
    ++it->second.tf;
    if (!fresh) it->second.first = std::min(it->second.first, ph.first_offset);
  }
  const std::string* best = nullptr;
  double best_score = 0.0;
  std::size_t best_first = 0;
  for (const auto& [phrase, st] : stats) {
    const double score = static_cast<double>(st.tf) * idf(phrase);
    const bool better = best == nullptr || score > best_score ||
                        (score == best_score && st.first < best_first);
    if (better) {
      best = &phrase;
      best_score = score;
      best_first = st.first;
    }
  }
  if (best == nullptr) return std::nullopt;
  return title_case(*best);
}

std::string title_case(const std::string& lowercase_words) {
  std::string out = lowercase_words;
  bool start = true;
  for (auto& c : out) {
    if (start && std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    start = std::isspace(static_cast<unsigned char>(c)) != 0;
  }
  return out;
}

std::string salient_phrase_of_first_sentence(const ParagraphRecord& paragraph) {
  const std::optional<std::size_t> first =
      paragraph.sentences.empty() ? std::nullopt : std::optional<std::size_t>(0);
  const std::vector<Token>* best = nullptr;
  const auto runs = content_runs(paragraph, first);
  for (const auto& run : runs) {
    if (best == nullptr || run.size() > best->size()) best = &run;
  }
  if (best != nullptr) {
    std::string words;
    for (std::size_t i = 0; i < best->size() && i < kMaxHeadingWords; ++i) {
      if (i) words += ' ';
      words += (*best)[i].term;
    }
    return title_case(words);
  }
  const auto tokens = tokenize(paragraph.text);
  if (!tokens.empty()) {
    std::string words;
    for (std::size_t i = 0; i < tokens.size() && i < 5; ++i) {
      if (i) words += ' ';
      words += tokens[i];
    }
    return title_case(words);
  }
  return "Untitled Paragraph";
}

std::pair<std::string, HeadingSource> assign_display_heading(
    const ParagraphRecord& paragraph, const HeadingProvider& provider) {
  if (is_descriptive_heading(paragraph.raw_heading)) {
    return {std::string(trim(paragraph.raw_heading)), HeadingSource::author};
  }
  std::optional<std::string> generated;
  try {
    generated = provider.generate(paragraph);
  } catch (const std::exception&) {
    generated.reset();
  }
  if (generated) {
    auto t = std::string(trim(*generated));
    const auto words = word_count(t);
    if (words > 0 && words <= kMaxHeadingWords) return {t, HeadingSource::generated};
  }
  return {salient_phrase_of_first_sentence(paragraph), HeadingSource::generated};
}

}  // namespace parascope
