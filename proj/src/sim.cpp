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

#include "parascope/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "parascope/ingest.hpp"
#include "parascope/session.hpp"

namespace parascope {

const char* to_string(SimStrategy s) {
  return s == SimStrategy::static_bm25 ? "static_bm25" : "dynamic_mmr";
}

std::optional<SimStrategy> sim_strategy_from_string(const std::string& s) {
  if (s == "static_bm25") return SimStrategy::static_bm25;
  if (s == "dynamic_mmr") return SimStrategy::dynamic_mmr;
  return std::nullopt;
}

void write_report_csv(const SimReport& report, std::ostream& out) {
  out << "step,unique_refs,fraction\n";
  for (const auto& s : report.steps) {
    out << s.step << ',' << s.unique_refs << ',' << s.fraction << '\n';
  }
}

double PortableRng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::size_t PortableRng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

int PortableRng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
}

double PortableRng::normal() {
  // Box-Muller; one draw per call keeps the stream position easy to reason about.
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

constexpr std::size_t kEmbeddingDim = 16;

const std::vector<std::string>& surnames() {
  static const std::vector<std::string> names = {
      "Smith", "Lee",    "Wu",     "Garcia", "Chen",   "Kim",   "Patel", "Novak",
      "Silva", "Okafor", "Muller", "Rossi",  "Tanaka", "Haddad", "Berg",  "Ivanova"};
  return names;
}

const std::vector<std::string>& shared_words() {
  static const std::vector<std::string> words = {"approach", "system",     "analysis",
                                                 "framework", "evaluation", "design"};
  return words;
}

std::string cluster_word(std::size_t cluster, std::size_t k) {
  static const std::vector<std::string> stems = {"model", "signal", "method",
                                                 "data",  "user",   "task"};
  return "c" + std::to_string(cluster) + stems[k % stems.size()];
}

std::string padded(const char* prefix, std::size_t i) {
  std::string digits = std::to_string(i);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return prefix + digits;
}

}  // namespace

Corpus generate_synthetic_corpus(std::uint64_t seed, std::size_t n_papers,
                                 std::size_t n_paragraphs, std::size_t n_clusters) {
  if (n_papers == 0 || n_paragraphs == 0 || n_clusters == 0) {
    throw std::invalid_argument("synthetic corpus parameters must be positive");
  }
  if (n_papers < 8) throw std::invalid_argument("need at least 8 papers for 3-8 references");
  PortableRng rng(seed);

  std::vector<Embedding> centers(n_clusters, Embedding(kEmbeddingDim));
  for (auto& c : centers) {
    for (auto& x : c) x = 4.0 * rng.normal();
  }

  std::vector<PaperRecord> papers(n_papers);
  std::vector<std::vector<std::size_t>> members(n_clusters);
  for (std::size_t i = 0; i < n_papers; ++i) {
    auto& p = papers[i];
    const std::size_t cluster = i % n_clusters;
    members[cluster].push_back(i);
    p.paper_id = padded("p", i);
    p.title = "Synthetic study " + std::to_string(i) + " on " + cluster_word(cluster, i);
    p.abstract = "A synthetic paper in cluster " + std::to_string(cluster) + ".";
    const int n_authors = rng.between(1, 4);
    for (int a = 0; a < n_authors; ++a) {
      p.authors.push_back("Author" + std::to_string(i) + " " +
                          surnames()[rng.below(surnames().size())]);
    }
    p.year = rng.between(1995, 2023);
    p.venue = "SYNTH";
    p.citation_count = static_cast<std::int64_t>(rng.below(500));
    Embedding e(kEmbeddingDim);
    for (std::size_t d = 0; d < kEmbeddingDim; ++d) e[d] = centers[cluster][d] + 0.5 * rng.normal();
    p.embedding = std::move(e);
  }

  for (std::size_t k = 0; k < n_paragraphs; ++k) {
    const std::size_t source = rng.below(n_papers);
    const std::size_t cluster = rng.below(n_clusters);
    const auto n_refs = static_cast<std::size_t>(rng.between(3, 8));

    std::vector<std::size_t> refs;
    std::set<std::size_t> used{source};
    std::size_t guard = 0;
    while (refs.size() < n_refs && guard++ < 10000) {
      const bool in_cluster = rng.uniform01() < 0.85;
      const auto& from = members[cluster];
      const std::size_t pick =
          in_cluster ? from[rng.below(from.size())] : rng.below(n_papers);
      if (used.insert(pick).second) refs.push_back(pick);
    }
    if (refs.size() < 3) throw std::logic_error("could not draw enough distinct references");

    RawParagraph para;
    for (std::size_t j = 0; j < refs.size(); ++j) {
      auto word = shared_words()[rng.below(shared_words().size())];
      word[0] = static_cast<char>(word[0] - 'a' + 'A');
      para.text += word + " of " + cluster_word(cluster, rng.below(6)) + " " +
                   cluster_word(cluster, rng.below(6));
      if (j == 0) {
        const int tf = rng.between(1, 3);
        for (int t = 0; t < tf; ++t) para.text += " exploration";
      }
      para.text += " ";
      const std::size_t begin = para.text.size();
      para.text += "[" + std::to_string(refs[j]) + "]";
      para.mentions.push_back({papers[refs[j]].paper_id, {begin, para.text.size()}});
      para.text += ". ";
    }
    para.text.pop_back();

    auto& sections = papers[source].sections;
    if (sections.empty()) sections.push_back({"Related Work", true, {}});
    sections.front().paragraphs.push_back(std::move(para));
  }
  return assemble_corpus(std::move(papers));
}

SimReport run_simulation(const Corpus& corpus, const InvertedIndex& index,
                         const std::string& query, SimPolicy policy, SimStrategy strategy,
                         std::size_t steps, const RankingConfig& config) {
  const auto pool = index.search(query, config.pool_size);
  if (pool.empty()) throw std::invalid_argument("query matches no paragraph: " + query);

  const auto refs = refs_by_paragraph(corpus);
  RefSet universe;
  for (const auto& c : pool) {
    const auto& r = refs.at(c.para_id);
    universe.insert(r.begin(), r.end());
  }

  SimReport report;
  report.strategy = strategy;
  report.total_refs = universe.size();

  PortableRng rng(policy.seed);
  Session session;
  session.session_id = "sim";
  auto log = [&](EventKind kind, nlohmann::json payload) {
    record_event(session, EventRecord{"", session.session_id, kind, std::move(payload)}, corpus);
  };

  for (std::size_t step = 1; step <= steps; ++step) {
    RankedPage page;
    if (strategy == SimStrategy::dynamic_mmr) {
      page = rank_for_session(session, pool, refs, config);
    } else {
      for (const auto& c : pool) {
        if (page.entries.size() >= config.page_size) break;
        if (!session.explored_paras.count(c.para_id)) {
          page.entries.push_back({c.para_id, c.bm25, 0.0, c.bm25});
        }
      }
    }
    if (page.entries.empty()) break;

    std::vector<ParaId> ids;
    for (const auto& e : page.entries) ids.push_back(e.para_id);
    log(EventKind::query, {{"q", query}, {"page", ids}});

    const std::size_t pick =
        policy.kind == SimPolicy::Kind::greedy_top ? 0 : rng.below(page.entries.size());
    log(EventKind::mark_paragraph_explored, {{"para_id", page.entries[pick].para_id}});

    std::size_t covered = 0;
    for (const auto& r : session.explored_refs) covered += universe.count(r);
    const double fraction =
        static_cast<double>(covered) / static_cast<double>(universe.size());
    report.steps.push_back({step, covered, fraction});
    if (!report.steps_to_90 && fraction >= 0.9) report.steps_to_90 = step;
  }
  return report;
}

SimReport run_simulation(const Corpus& corpus, const std::string& query, SimPolicy policy,
                         SimStrategy strategy, std::size_t steps, const RankingConfig& config) {
  return run_simulation(corpus, build_index(corpus), query, policy, strategy, steps, config);
}

}  // namespace parascope
