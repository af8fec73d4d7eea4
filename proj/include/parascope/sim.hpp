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

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "parascope/corpus.hpp"
#include "parascope/index.hpp"
#include "parascope/ranker.hpp"

namespace parascope {

enum class SimStrategy { static_bm25, dynamic_mmr };

struct SimPolicy {
  enum class Kind { greedy_top, uniform_random };
  Kind kind = Kind::greedy_top;
  std::uint64_t seed = 0;  // used by uniform_random only

  static SimPolicy greedy_top() { return {Kind::greedy_top, 0}; }
  static SimPolicy uniform_random(std::uint64_t seed) { return {Kind::uniform_random, seed}; }
};

const char* to_string(SimStrategy s);
std::optional<SimStrategy> sim_strategy_from_string(const std::string& s);

struct SimStep {
  std::size_t step = 0;
  std::size_t unique_refs = 0;
  double fraction = 0.0;

  bool operator==(const SimStep&) const = default;
};

struct SimReport {
  SimStrategy strategy = SimStrategy::dynamic_mmr;
  std::size_t total_refs = 0;  // distinct references across the query's pool
  std::vector<SimStep> steps;
  std::optional<std::size_t> steps_to_90;

  bool operator==(const SimReport&) const = default;
};

// Writes "step,unique_refs,fraction" followed by one row per step.
void write_report_csv(const SimReport& report, std::ostream& out);

/// Draws from a 64-bit Mersenne Twister with portable mappings, so the
/// same seed gives the same stream on every standard library.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform01();                                // [0, 1)
  std::size_t below(std::size_t n);                  // [0, n)
  int between(int lo, int hi);                       // [lo, hi]
  double normal();

 private:
  std::mt19937_64 engine_;
};

inline constexpr const char* kSyntheticQuery = "exploration";

/// Seeded synthetic corpus: papers fall into clusters with embeddings drawn
/// around per-cluster centres, and each paragraph cites 3 to 8 papers, mostly
/// from one cluster. Every paragraph mentions kSyntheticQuery.
Corpus generate_synthetic_corpus(std::uint64_t seed, std::size_t n_papers,
                                 std::size_t n_paragraphs, std::size_t n_clusters);

/// Simulated user. Each step fetches a page under `strategy`, lets `policy`
/// pick a paragraph, and marks it explored. static_bm25 keeps the BM25
/// order (minus explored paragraphs); dynamic_mmr re-ranks after every step.
/// The run ends early once no unexplored paragraph remains.
///
/// Throws std::invalid_argument when the query matches nothing.
SimReport run_simulation(const Corpus& corpus, const InvertedIndex& index,
                         const std::string& query, SimPolicy policy, SimStrategy strategy,
                         std::size_t steps, const RankingConfig& config = {});

SimReport run_simulation(const Corpus& corpus, const std::string& query, SimPolicy policy,
                         SimStrategy strategy, std::size_t steps,
                         const RankingConfig& config = {});

}  // namespace parascope
