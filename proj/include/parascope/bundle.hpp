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

#include "parascope/corpus.hpp"
#include "parascope/index.hpp"
#include "parascope/similarity.hpp"

namespace parascope {

/// Everything `ingest` writes to an index directory:
///   corpus.json    processed corpus
///   index.json     inverted index
///   manifest.json  ingest statistics and calibrated similarity thresholds
struct IndexBundle {
  Corpus corpus;
  InvertedIndex index;
  SimilarityConfig calibration;
};

IndexBundle make_bundle(Corpus corpus);
void write_bundle(const IndexBundle& bundle, const std::filesystem::path& dir);
IndexBundle read_bundle(const std::filesystem::path& dir);

}  // namespace parascope
