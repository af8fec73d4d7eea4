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

#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "parascope/corpus.hpp"
#include "parascope/ranker.hpp"

namespace parascope {

class SimilarityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source of paper embeddings. lookup() is deterministic and every returned
/// vector has length dim().
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual const Embedding* lookup(const PaperId& id) const = 0;
  virtual std::size_t dim() const = 0;
};

// Borrows vectors from a corpus, which must outlive the provider.
class CorpusEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit CorpusEmbeddingProvider(const Corpus& corpus);
  const Embedding* lookup(const PaperId& id) const override;
  std::size_t dim() const override { return dim_; }

 private:
  std::map<PaperId, const Embedding*> vectors_;
  std::size_t dim_ = 0;
};

class MapEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit MapEmbeddingProvider(std::map<PaperId, Embedding> vectors);
  const Embedding* lookup(const PaperId& id) const override;
  std::size_t dim() const override { return dim_; }

 private:
  std::map<PaperId, Embedding> vectors_;
  std::size_t dim_ = 0;
};

struct SimilarityConfig {
  double tau_highlight = 0.0;
  double d_norm = 1.0;
  double theta_sim = 0.0;

  void validate() const;
};

double euclidean_distance(std::span<const double> u, std::span<const double> v);

// Throws SimilarityError when `set` is empty.
double min_distance_to_set(std::span<const double> v, const std::vector<const Embedding*>& set);

/// Brightness of the highlight on an unexplored reference: 0 when the
/// reference is explored, has no embedding, or nothing explored has one;
/// otherwise the distance to the nearest explored paper mapped linearly from
/// [tau_highlight, d_norm] onto [0, 1] and clamped.
double highlight_intensity(const PaperId& ref, const RefSet& explored,
                           const EmbeddingProvider& provider, const SimilarityConfig& config);

struct SimilarEntry {
  ParaId para_id;
  std::size_t shared = 0;
  double affinity = std::numeric_limits<double>::infinity();

  bool operator==(const SimilarEntry&) const = default;
};

// Mean over the candidate's embedded references of the distance to the
// closest embedded reference of the selected paragraph; +inf when either
// side has no embedded reference.
double reference_affinity(const RefSet& candidate, const RefSet& selected,
                          const EmbeddingProvider& provider);

/// Paragraphs sharing a reference with `selected`, or whose affinity is
/// within theta_sim, ordered by (shared desc, affinity asc, para_id asc).
/// `selected` itself and repeated pool entries are skipped.
std::vector<SimilarEntry> similar_paragraphs(const ParagraphRecord& selected,
                                             const std::vector<const ParagraphRecord*>& pool,
                                             const EmbeddingProvider& provider,
                                             const SimilarityConfig& config);

// Linear-interpolation percentile, q in [0, 100]. `values` must be non-empty.
double percentile(std::vector<double> values, double q);

/// Per-corpus defaults: tau_highlight and theta_sim at the 25th percentile
/// and d_norm at the 90th percentile of pairwise distances between embedded
/// papers. At most `max_pairs` pairs are used; larger sets are sampled with a
/// fixed seed.
SimilarityConfig calibrate_similarity(const Corpus& corpus, std::size_t max_pairs = 200000);

}  // namespace parascope
