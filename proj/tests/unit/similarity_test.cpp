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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "parascope/similarity.hpp"
#include "support/fixture.hpp"

namespace parascope {
namespace {

ParagraphRecord para(const std::string& id, const std::vector<std::string>& refs) {
  ParagraphRecord p;
  p.para_id = id;
  for (const auto& r : refs) p.references.push_back({r, {}, "", true});
  return p;
}

MapEmbeddingProvider stub_embeddings() {
  return MapEmbeddingProvider({{"a", {0, 0}},  {"b", {1, 0}},  {"c", {0, 1}},
                               {"x", {1, 1}},  {"y", {2, 0}},  {"z", {0, 2}},
                               {"p", {50, 50}}, {"q", {51, 50}}, {"r", {50, 51}}});
}

TEST(EuclideanDistance, Examples) {
  const Embedding u{0, 0}, v{3, 4};
  EXPECT_EQ(euclidean_distance(u, u), 0.0);
  EXPECT_DOUBLE_EQ(euclidean_distance(u, v), 5.0);
  EXPECT_THROW(euclidean_distance(u, Embedding{1, 2, 3}), SimilarityError);
}

TEST(EuclideanDistance, SymmetricAndTriangle) {
  std::mt19937 rng(1);
  std::normal_distribution<double> g;
  for (int i = 0; i < 500; ++i) {
    Embedding u(8), v(8), w(8);
    for (auto* e : {&u, &v, &w}) for (auto& x : *e) x = g(rng);
    EXPECT_EQ(euclidean_distance(u, v), euclidean_distance(v, u));
    EXPECT_LE(euclidean_distance(u, w), euclidean_distance(u, v) + euclidean_distance(v, w) + 1e-12);
  }
}

TEST(MinDistanceToSet, Examples) {
  const Embedding v{0, 0}, a{3, 4}, b{0, 1};
  EXPECT_EQ(min_distance_to_set(v, {&v}), 0.0);
  EXPECT_DOUBLE_EQ(min_distance_to_set(v, {&a, &b}), 1.0);
  EXPECT_THROW(min_distance_to_set(v, {}), SimilarityError);
  for (const auto* s : {&a, &b}) EXPECT_LE(min_distance_to_set(v, {&a, &b}), euclidean_distance(v, *s));
}

TEST(HighlightIntensity, LinearMapEndpoints) {
  const MapEmbeddingProvider e({{"seen", {0, 0}}, {"lo", {2, 0}}, {"hi", {10, 0}}, {"mid", {6, 0}},
                                {"far", {99, 0}}, {"near", {1, 0}}});
  const SimilarityConfig cfg{2.0, 10.0, 0.0};
  const RefSet explored{"seen"};
  EXPECT_EQ(highlight_intensity("lo", explored, e, cfg), 0.0);
  EXPECT_EQ(highlight_intensity("hi", explored, e, cfg), 1.0);
  EXPECT_DOUBLE_EQ(highlight_intensity("mid", explored, e, cfg), 0.5);
  EXPECT_EQ(highlight_intensity("far", explored, e, cfg), 1.0);
  EXPECT_EQ(highlight_intensity("near", explored, e, cfg), 0.0);
  EXPECT_EQ(highlight_intensity("seen", explored, e, cfg), 0.0);
  EXPECT_EQ(highlight_intensity("mid", {}, e, cfg), 0.0);
  EXPECT_EQ(highlight_intensity("unknown", explored, e, cfg), 0.0);
}

TEST(HighlightIntensity, MonotoneInDistanceAndBounded) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  const SimilarityConfig cfg{1.0, 4.0, 0.0};
  for (int trial = 0; trial < 300; ++trial) {
    const Embedding seen{u(rng), u(rng)};
    const Embedding near{u(rng), u(rng)};
    const double d = euclidean_distance(seen, near);
    const Embedding far{seen[0] + (near[0] - seen[0]) * 2, seen[1] + (near[1] - seen[1]) * 2};
    const MapEmbeddingProvider e({{"s", seen}, {"n", near}, {"f", far}});
    const double a = highlight_intensity("n", {"s"}, e, cfg);
    const double b = highlight_intensity("f", {"s"}, e, cfg);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(b, 1.0);
    if (d > 0) EXPECT_LE(a, b);
  }
}

TEST(SimilarParagraphs, WorkedExample) {
  const auto e = stub_embeddings();
  const auto sel = para("S", {"a", "b", "c"});
  const auto c1 = para("C1", {"a", "b", "x"});
  const auto c2 = para("C2", {"a", "y", "z"});
  const auto c3 = para("C3", {"p", "q", "r"});
  const SimilarityConfig cfg{0.0, 1.0, 3.0};
  ASSERT_GT(reference_affinity(c3.ref_set(), sel.ref_set(), e), cfg.theta_sim);
  const auto out = similar_paragraphs(sel, {&c3, &c2, &c1}, e, cfg);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].para_id, "C1");
  EXPECT_EQ(out[0].shared, 2u);
  EXPECT_EQ(out[1].para_id, "C2");
  EXPECT_EQ(out[1].shared, 1u);
}

TEST(SimilarParagraphs, IdenticalRefsFirstAndEmptyPool) {
  const auto e = stub_embeddings();
  const auto sel = para("S", {"a", "b", "c"});
  const auto twin = para("T", {"a", "b", "c"});
  const auto c1 = para("C1", {"a", "b", "x"});
  EXPECT_EQ(similar_paragraphs(sel, {&c1, &twin}, e, {}).front().para_id, "T");
  EXPECT_TRUE(similar_paragraphs(sel, {}, e, {}).empty());
  EXPECT_TRUE(similar_paragraphs(sel, {&sel}, e, {}).empty());
}

TEST(SimilarParagraphs, AffinityAdmitsNonSharingNeighbours) {
  const auto e = stub_embeddings();
  const auto sel = para("S", {"a", "b", "c"});
  const auto near = para("N", {"x", "y", "z"});
  EXPECT_TRUE(similar_paragraphs(sel, {&near}, e, {0, 1, 0.5}).empty());
  const auto out = similar_paragraphs(sel, {&near}, e, {0, 1, 2.0});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].shared, 0u);
  EXPECT_NEAR(out[0].affinity, 1.0, 1e-12);
}

TEST(SimilarParagraphs, MatchesSortOracle) {
  std::mt19937 rng(21);
  const auto e = stub_embeddings();
  const std::vector<std::string> vocab = {"a", "b", "c", "x", "y", "z", "p", "q", "r", "nov"};
  for (int trial = 0; trial < 300; ++trial) {
    auto pick = [&] {
      std::vector<std::string> refs;
      for (const auto& v : vocab) if (rng() % 3 == 0) refs.push_back(v);
      return refs;
    };
    const auto sel = para("S", pick());
    std::vector<ParagraphRecord> pool;
    for (int i = 0; i < 12; ++i) pool.push_back(para("P" + std::to_string(10 + i), pick()));
    std::vector<const ParagraphRecord*> ptrs;
    for (const auto& p : pool) ptrs.push_back(&p);
    const SimilarityConfig cfg{0, 1, 2.0};
    const auto got = similar_paragraphs(sel, ptrs, e, cfg);
    std::vector<SimilarEntry> want;
    for (const auto& p : pool) {
      std::size_t shared = 0;
      for (const auto& r : p.ref_set()) shared += sel.ref_set().count(r);
      const double aff = reference_affinity(p.ref_set(), sel.ref_set(), e);
      if (shared > 0 || aff <= cfg.theta_sim) want.push_back({p.para_id, shared, aff});
    }
    // Insertion sort by the documented key.
    for (std::size_t i = 1; i < want.size(); ++i) {
      for (std::size_t j = i; j > 0; --j) {
        const auto& a = want[j - 1];
        const auto& b = want[j];
        const bool swap = b.shared > a.shared ||
                          (b.shared == a.shared && (b.affinity < a.affinity ||
                                                    (b.affinity == a.affinity && b.para_id < a.para_id)));
        if (!swap) break;
        std::swap(want[j - 1], want[j]);
      }
    }
    EXPECT_EQ(got, want);
  }
}

TEST(ReferenceAffinity, InfiniteWithoutEmbeddings) {
  const auto e = stub_embeddings();
  EXPECT_TRUE(std::isinf(reference_affinity({"nov"}, {"a"}, e)));
  EXPECT_TRUE(std::isinf(reference_affinity({"a"}, {"nov"}, e)));
  EXPECT_EQ(reference_affinity({"a"}, {"a"}, e), 0.0);
}

TEST(Percentile, LinearInterpolation) {
  EXPECT_DOUBLE_EQ(percentile({1, 2, 3, 4, 5}, 25), 2.0);
  EXPECT_DOUBLE_EQ(percentile({1, 2, 3, 4}, 90), 3.7);
  EXPECT_DOUBLE_EQ(percentile({7}, 50), 7.0);
  EXPECT_THROW(percentile({}, 50), SimilarityError);
}

TEST(Calibration, FixtureIsOrderedAndValid) {
  const auto cfg = calibrate_similarity(testing::fixture_corpus());
  EXPECT_NO_THROW(cfg.validate());
  EXPECT_LT(cfg.tau_highlight, cfg.d_norm);
  EXPECT_EQ(cfg.theta_sim, cfg.tau_highlight);
}

TEST(Calibration, DegenerateSpreadStaysWellDefined) {
  Corpus c;
  for (const auto* id : {"a", "b", "c"}) {
    PaperRecord p;
    p.paper_id = id;
    p.embedding = Embedding{1, 1};
    c.papers[id] = p;
  }
  const auto cfg = calibrate_similarity(c);
  EXPECT_EQ(cfg.tau_highlight, 0.0);
  EXPECT_EQ(cfg.d_norm, 1.0);
}

TEST(Calibration, SamplingIsDeterministic) {
  Corpus c;
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  for (int i = 0; i < 60; ++i) {
    PaperRecord p;
    p.paper_id = "p" + std::to_string(i);
    p.embedding = Embedding{g(rng), g(rng), g(rng)};
    c.papers[p.paper_id] = p;
  }
  const auto a = calibrate_similarity(c, 100);
  const auto b = calibrate_similarity(c, 100);
  EXPECT_EQ(a.tau_highlight, b.tau_highlight);
  EXPECT_EQ(a.d_norm, b.d_norm);
}

}  // namespace
}  // namespace parascope
