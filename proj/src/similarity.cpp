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

#include "parascope/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace parascope {

CorpusEmbeddingProvider::CorpusEmbeddingProvider(const Corpus& corpus)
    : dim_(corpus.embedding_dim.value_or(0)) {
  for (const auto& [id, p] : corpus.papers) {
    if (p.embedding) vectors_.emplace(id, &*p.embedding);
  }
}

const Embedding* CorpusEmbeddingProvider::lookup(const PaperId& id) const {
  auto it = vectors_.find(id);
  return it == vectors_.end() ? nullptr : it->second;
}

MapEmbeddingProvider::MapEmbeddingProvider(std::map<PaperId, Embedding> vectors)
    : vectors_(std::move(vectors)) {
  for (const auto& [id, v] : vectors_) {
    if (dim_ == 0) dim_ = v.size();
    if (v.size() != dim_) throw SimilarityError("embedding dimension mismatch for " + id);
  }
}

const Embedding* MapEmbeddingProvider::lookup(const PaperId& id) const {
  auto it = vectors_.find(id);
  return it == vectors_.end() ? nullptr : &it->second;
}

void SimilarityConfig::validate() const {
  if (!(tau_highlight >= 0.0)) throw std::invalid_argument("similarity.tau_highlight must be >= 0");
  if (!(d_norm > tau_highlight)) {
    throw std::invalid_argument("similarity.d_norm must exceed similarity.tau_highlight");
  }
  if (!(theta_sim >= 0.0)) throw std::invalid_argument("similarity.theta_sim must be >= 0");
}

double euclidean_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw SimilarityError("dimension mismatch: " + std::to_string(u.size()) + " vs " +
                          std::to_string(v.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double min_distance_to_set(std::span<const double> v, const std::vector<const Embedding*>& set) {
  if (set.empty()) throw SimilarityError("distance to an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto* s : set) best = std::min(best, euclidean_distance(v, *s));
  return best;
}

double highlight_intensity(const PaperId& ref, const RefSet& explored,
                           const EmbeddingProvider& provider, const SimilarityConfig& config) {
  if (explored.count(ref)) return 0.0;
  const auto* v = provider.lookup(ref);
  if (v == nullptr) return 0.0;
  std::vector<const Embedding*> seen;
  for (const auto& e : explored) {
    if (const auto* x = provider.lookup(e)) seen.push_back(x);
  }
  if (seen.empty()) return 0.0;
  const double d = min_distance_to_set(*v, seen);
  const double t = (d - config.tau_highlight) / (config.d_norm - config.tau_highlight);
  return std::clamp(t, 0.0, 1.0);
}

double reference_affinity(const RefSet& candidate, const RefSet& selected,
                          const EmbeddingProvider& provider) {
  std::vector<const Embedding*> anchors;
  for (const auto& r : selected) {
    if (const auto* v = provider.lookup(r)) anchors.push_back(v);
  }
  if (anchors.empty()) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : candidate) {
    const auto* v = provider.lookup(r);
    if (v == nullptr) continue;
    sum += min_distance_to_set(*v, anchors);
    ++n;
  }
  return n == 0 ? std::numeric_limits<double>::infinity() : sum / static_cast<double>(n);
}

std::vector<SimilarEntry> similar_paragraphs(const ParagraphRecord& selected,
                                             const std::vector<const ParagraphRecord*>& pool,
                                             const EmbeddingProvider& provider,
                                             const SimilarityConfig& config) {
  const auto selected_refs = selected.ref_set();
  std::set<ParaId> visited{selected.para_id};
  std::vector<SimilarEntry> out;
  for (const auto* p : pool) {
    if (!visited.insert(p->para_id).second) continue;
    const auto refs = p->ref_set();
    SimilarEntry e{p->para_id, 0, reference_affinity(refs, selected_refs, provider)};
    for (const auto& r : refs) e.shared += selected_refs.count(r);
    if (e.shared >= 1 || e.affinity <= config.theta_sim) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const SimilarEntry& a, const SimilarEntry& b) {
    if (a.shared != b.shared) return a.shared > b.shared;
    if (a.affinity != b.affinity) return a.affinity < b.affinity;
    return a.para_id < b.para_id;
  });
  return out;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw SimilarityError("percentile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q / 100.0 * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

SimilarityConfig calibrate_similarity(const Corpus& corpus, std::size_t max_pairs) {
  std::vector<const Embedding*> vectors;
  for (const auto& [_, p] : corpus.papers) {
    if (p.embedding) vectors.push_back(&*p.embedding);
  }
  const std::size_t n = vectors.size();
  if (n < 2) return {};

  std::vector<double> distances;
  const std::size_t all_pairs = n * (n - 1) / 2;
  if (all_pairs <= max_pairs) {
    distances.reserve(all_pairs);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        distances.push_back(euclidean_distance(*vectors[i], *vectors[j]));
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    distances.reserve(max_pairs);
    while (distances.size() < max_pairs) {
      const auto i = static_cast<std::size_t>(rng() % n);
      const auto j = static_cast<std::size_t>(rng() % n);
      if (i != j) distances.push_back(euclidean_distance(*vectors[i], *vectors[j]));
    }
  }

  SimilarityConfig cfg;
  cfg.tau_highlight = percentile(distances, 25.0);
  cfg.theta_sim = cfg.tau_highlight;
  cfg.d_norm = percentile(distances, 90.0);
  if (cfg.d_norm <= cfg.tau_highlight) {
    // Degenerate spread (e.g. identical vectors): keep the map well defined.
    cfg.d_norm = cfg.tau_highlight + std::max(1.0, cfg.tau_highlight);
  }
  return cfg;
}

}  // namespace parascope
