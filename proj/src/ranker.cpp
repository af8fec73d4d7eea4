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

#include "parascope/ranker.hpp"

#include <algorithm>
#include <stdexcept>

namespace parascope {

void RankingConfig::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("ranking.lambda must lie in [0, 1]");
  }
  if (page_size == 0 || pool_size == 0) {
    throw std::invalid_argument("ranking.page_size and ranking.pool_size must be positive");
  }
  if (page_size > pool_size) {
    throw std::invalid_argument("ranking.page_size must not exceed ranking.pool_size");
  }
}

double novelty_term(const RefSet& refs, const RefSet& covered, double lambda) {
  std::size_t overlap = 0;
  for (const auto& r : refs) overlap += covered.count(r);
  return lambda * static_cast<double>(refs.size()) -
         (1.0 - lambda) * static_cast<double>(overlap);
}

RankedPage mmr_rerank(const std::vector<QueryCandidate>& candidates,
                      const RefsByPara& refs_by_para, const RefSet& explored,
                      const RankingConfig& config) {
  struct Pending {
    const QueryCandidate* candidate;
    const RefSet* refs;
  };
  std::vector<Pending> remaining;
  remaining.reserve(candidates.size());
  for (const auto& c : candidates) {
    auto it = refs_by_para.find(c.para_id);
    if (it == refs_by_para.end()) {
      throw std::invalid_argument("no reference set for candidate " + c.para_id);
    }
    remaining.push_back({&c, &it->second});
  }

  RankedPage page;
  RefSet covered = explored;
  while (!remaining.empty() && page.entries.size() < config.page_size) {
    std::size_t best = 0;
    RankedEntry best_entry;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const auto& [cand, refs] = remaining[i];
      const double nov = novelty_term(*refs, covered, config.lambda);
      const RankedEntry e{cand->para_id, cand->bm25, nov, cand->bm25 * nov};
      const bool wins = i == 0 || e.score > best_entry.score ||
                        (e.score == best_entry.score &&
                         (e.bm25 > best_entry.bm25 ||
                          (e.bm25 == best_entry.bm25 && e.para_id < best_entry.para_id)));
      if (wins) {
        best = i;
        best_entry = e;
      }
    }
    covered.insert(remaining[best].refs->begin(), remaining[best].refs->end());
    page.entries.push_back(std::move(best_entry));
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return page;
}

RefsByPara refs_by_paragraph(const Corpus& corpus) {
  RefsByPara out;
  for (const auto& [id, p] : corpus.paragraphs) out.emplace(id, p.ref_set());
  return out;
}

}  // namespace parascope
