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
#include <map>
#include <set>
#include <vector>

#include "parascope/corpus.hpp"
#include "parascope/index.hpp"

namespace parascope {

using RefSet = std::set<PaperId>;
using RefsByPara = std::map<ParaId, RefSet>;

struct RankingConfig {
  double lambda = 0.3;
  std::size_t page_size = 30;
  std::size_t pool_size = 200;

  // Throws std::invalid_argument when out of range.
  void validate() const;
};

struct RankedEntry {
  ParaId para_id;
  double bm25 = 0.0;
  double novelty = 0.0;  // bracketed term at selection time
  double score = 0.0;    // bm25 * novelty

  bool operator==(const RankedEntry&) const = default;
};

struct RankedPage {
  std::vector<RankedEntry> entries;

  bool operator==(const RankedPage&) const = default;
};

/// lambda * |refs| - (1 - lambda) * |refs ∩ covered|. May be negative.
double novelty_term(const RefSet& refs, const RefSet& covered, double lambda);

/// Greedy exploration-aware re-ranking.
///
/// At each rank, `covered` holds the references of the paragraphs already
/// placed plus `explored`; each remaining candidate scores
/// bm25 * novelty_term(refs, covered, lambda) and the maximum is taken. Ties
/// fall to the higher bm25, then the smaller para_id. The product is used as
/// is, so with a negative bracket a larger bm25 pushes a paragraph down.
///
/// Throws std::invalid_argument if a candidate has no entry in refs_by_para.
RankedPage mmr_rerank(const std::vector<QueryCandidate>& candidates,
                      const RefsByPara& refs_by_para, const RefSet& explored,
                      const RankingConfig& config);

RefsByPara refs_by_paragraph(const Corpus& corpus);

}  // namespace parascope
