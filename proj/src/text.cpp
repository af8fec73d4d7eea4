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

#include "parascope/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "parascope/utf8.hpp"

namespace parascope {

namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

bool is_closer(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

bool ends_with_icase(std::string_view text, std::size_t end,
                     std::string_view suffix) {
  if (suffix.size() > end) return false;
  for (std::size_t i = 0; i < suffix.size(); ++i) {
    auto a = std::tolower(static_cast<unsigned char>(text[end - suffix.size() + i]));
    auto b = std::tolower(static_cast<unsigned char>(suffix[i]));
    if (a != b) return false;
  }
  return true;
}

// `end` is one past the period.
bool guarded_period(std::string_view text, std::size_t end) {
  for (const auto& guard : abbreviation_guards()) {
    if (!ends_with_icase(text, end, guard)) continue;
    const std::size_t start = end - guard.size();
    if (start == 0 || !is_word_byte(static_cast<unsigned char>(text[start - 1]))) {
      return true;
    }
  }
  return false;
}

Span trimmed(std::string_view text, Span s) {
  while (s.begin < s.end && is_space(static_cast<unsigned char>(text[s.begin]))) ++s.begin;
  while (s.end > s.begin && is_space(static_cast<unsigned char>(text[s.end - 1]))) --s.end;
  return s;
}

}  // namespace

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool at_word_boundaries(std::string_view text, std::size_t pos, std::size_t len) {
  const bool left = pos == 0 || !is_word_byte(static_cast<unsigned char>(text[pos - 1]));
  const std::size_t end = pos + len;
  const bool right = end >= text.size() || !is_word_byte(static_cast<unsigned char>(text[end]));
  return left && right;
}

std::vector<Token> tokenize_with_spans(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && is_word_byte(static_cast<unsigned char>(text[j]))) ++j;
    const auto word = text.substr(i, j - i);
    if (utf8::length(word) >= 2) out.push_back({to_lower_ascii(word), {i, j}});
    i = j;
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> terms;
  for (auto& t : tokenize_with_spans(text)) terms.push_back(std::move(t.term));
  return terms;
}

const std::vector<std::string>& abbreviation_guards() {
  static const std::vector<std::string> guards = {
      "et al.", "e.g.", "i.e.", "cf.", "vs.", "fig.", "figs.", "eq.", "eqs.",
      "sec.", "tab.", "ref.", "refs.", "no.", "vol.", "pp.", "dr.", "mr.",
      "ms.", "prof.", "approx.", "resp.", "al."};
  return guards;
}

std::vector<Span> segment_sentences(std::string_view text) {
  std::vector<Span> out;
  const std::size_t n = text.size();
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    while (j < n && is_closer(text[j])) ++j;
    if (j >= n || !is_space(static_cast<unsigned char>(text[j]))) continue;
    std::size_t k = j;
    while (k < n && is_space(static_cast<unsigned char>(text[k]))) ++k;
    if (k >= n || !std::isupper(static_cast<unsigned char>(text[k]))) continue;
    if (c == '.' && guarded_period(text, i + 1)) continue;
    auto s = trimmed(text, {start, j});
    if (!s.empty()) out.push_back(s);
    start = k;
    i = k - 1;
  }
  auto last = trimmed(text, {start, n});
  if (!last.empty()) out.push_back(last);
  return out;
}

const std::vector<std::string>& default_self_reference_phrases() {
  static const std::vector<std::string> phrases = {
      "in this paper", "our approach", "our system", "our work",
      "our method",    "we propose",   "this work"};
  return phrases;
}

SelfReferenceMatcher::SelfReferenceMatcher()
    : SelfReferenceMatcher(default_self_reference_phrases()) {}

SelfReferenceMatcher::SelfReferenceMatcher(std::vector<std::string> phrases) {
  for (auto& p : phrases) {
    auto t = to_lower_ascii(trim(p));
    if (!t.empty()) phrases_.push_back(std::move(t));
  }
  std::sort(phrases_.begin(), phrases_.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  phrases_.erase(std::unique(phrases_.begin(), phrases_.end()), phrases_.end());
}

SelfReferenceMatcher SelfReferenceMatcher::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read self-reference list: " + path.string());
  std::vector<std::string> phrases;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    phrases.emplace_back(t);
  }
  return SelfReferenceMatcher(std::move(phrases));
}

std::vector<Span> SelfReferenceMatcher::find(std::string_view text) const {
  const auto lower = to_lower_ascii(text);
  std::vector<Span> out;
  std::size_t pos = 0;
  while (pos < lower.size()) {
    bool matched = false;
    if (pos == 0 || !is_word_byte(static_cast<unsigned char>(lower[pos - 1]))) {
      for (const auto& p : phrases_) {
        if (lower.compare(pos, p.size(), p) == 0 && at_word_boundaries(lower, pos, p.size())) {
          out.push_back({pos, pos + p.size()});
          pos += p.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) ++pos;
  }
  return out;
}

const std::vector<std::string>& generic_heading_terms() {
  static const std::vector<std::string> terms = {
      "literature review", "background", "limitations", "future work",
      "conclusion",        "discussion", "related work", "results"};
  return terms;
}

bool is_descriptive_heading(std::string_view heading) {
  const auto h = trim(heading);
  if (h.empty()) return false;

  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < h.size()) {
    while (i < h.size() && is_space(static_cast<unsigned char>(h[i]))) ++i;
    std::size_t j = i;
    while (j < h.size() && !is_space(static_cast<unsigned char>(h[j]))) ++j;
    if (j > i) words.push_back(h.substr(i, j - i));
    i = j;
  }

  if (words.size() == 1) {
    const auto w = words.front();
    const bool acronym = w.size() >= 2 && std::all_of(w.begin(), w.end(), [](unsigned char c) {
                           return std::isupper(c) || std::isdigit(c);
                         });
    if (acronym) return false;
  }
  if (words.size() < 3) return false;

  const auto lower = to_lower_ascii(h);
  for (const auto& term : generic_heading_terms()) {
    for (auto pos = lower.find(term); pos != std::string::npos; pos = lower.find(term, pos + 1)) {
      if (at_word_boundaries(lower, pos, term.size())) return false;
    }
  }
  return true;
}

}  // namespace parascope
