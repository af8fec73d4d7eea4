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

#include <atomic>
#include <filesystem>
#include <string>
#include <unistd.h>

#include "parascope/ingest.hpp"

namespace parascope::testing {

inline std::filesystem::path data_path(const std::string& rel) {
  return std::filesystem::path(PARASCOPE_TEST_DATA) / rel;
}

inline std::filesystem::path fixture_corpus_path() { return data_path("fixtures/corpus.jsonl"); }

inline const Corpus& fixture_corpus() {
  static const Corpus corpus = load_corpus(fixture_corpus_path());
  return corpus;
}

// Para ids of the three "fake news" paragraphs, in id order.
inline const std::string kF1 = "s1:0:0";
inline const std::string kF2 = "s2:0:0";
inline const std::string kF3 = "s3:0:0";
inline const std::string kC1 = "s4:0:0";
inline const std::string kC2 = "s4:1:0";
inline const std::string kD1 = "s5:1:0";

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("parascope-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::permissions(path_, std::filesystem::perms::owner_all,
                                 std::filesystem::perm_options::add, ec);
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace parascope::testing
