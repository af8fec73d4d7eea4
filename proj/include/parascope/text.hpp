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

#include <compare>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace parascope {

/// Half-open byte interval [begin, end) into a UTF-8 string.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin >= end; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  auto operator<=>(const Span&) const = default;
};

struct Token {
  std::string term;
  Span span;
};

// Lowercased alphanumeric runs of at least two code points. Bytes >= 0x80 are
// treated as word characters so non-ASCII words survive intact.
std::vector<std::string> tokenize(std::string_view text);
std::vector<Token> tokenize_with_spans(std::string_view text);

/// Rule-based sentence splitter.
///
/// A boundary is placed after '.', '!' or '?' (plus any closing quotes or
/// brackets) when followed by whitespace and an uppercase ASCII letter, unless
/// the word ending at the period is in the abbreviation guard list or is a
/// single-letter initial. Returned intervals are trimmed of surrounding
/// whitespace, so together they cover every non-whitespace byte.
std::vector<Span> segment_sentences(std::string_view text);

const std::vector<std::string>& abbreviation_guards();

/// Case-insensitive, word-bounded phrase matcher for self-referencing
/// phrases ("in this paper", "our approach", ...). Matches are leftmost,
/// longest and non-overlapping.
class SelfReferenceMatcher {
 public:
  SelfReferenceMatcher();  // built-in phrase list
  explicit SelfReferenceMatcher(std::vector<std::string> phrases);

  // One phrase per line; blank lines and lines starting with '#' ignored.
  static SelfReferenceMatcher from_file(const std::filesystem::path& path);

  std::vector<Span> find(std::string_view text) const;
  const std::vector<std::string>& phrases() const { return phrases_; }

 private:
  std::vector<std::string> phrases_;  // lowercased, longest first
};

const std::vector<std::string>& default_self_reference_phrases();

// Terms that make a section heading generic.
const std::vector<std::string>& generic_heading_terms();

/// False for empty headings, single acronyms, headings with fewer than three
/// whitespace-separated words, and headings containing a generic term.
bool is_descriptive_heading(std::string_view heading);

std::string to_lower_ascii(std::string_view s);
std::string_view trim(std::string_view s);
bool is_word_byte(unsigned char c);

// True when [pos, pos+len) in `text` is not glued to neighbouring word
// characters.
bool at_word_boundaries(std::string_view text, std::size_t pos, std::size_t len);

}  // namespace parascope
