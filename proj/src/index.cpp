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

#include "parascope/index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "parascope/text.hpp"

namespace parascope {

using nlohmann::json;

namespace {

std::vector<std::string> unique_terms(const std::vector<std::string>& terms) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& t : terms) {
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

}  // namespace

InvertedIndex InvertedIndex::build(const std::vector<IndexDocument>& docs, Bm25Params params) {
  if (docs.empty()) throw IndexError("cannot index an empty corpus");
  InvertedIndex index;
  index.params_ = params;
  std::size_t total = 0;
  for (const auto& doc : docs) {
    if (index.doc_lengths_.count(doc.para_id)) {
      throw IndexError("duplicate para_id: " + doc.para_id);
    }
    const auto terms = tokenize(doc.text);
    index.doc_lengths_[doc.para_id] = terms.size();
    total += terms.size();
    std::map<std::string, std::size_t> tf;
    for (const auto& t : terms) ++tf[t];
    for (const auto& [term, count] : tf) index.postings_[term].push_back({doc.para_id, count});
  }
  for (auto& [term, list] : index.postings_) {
    std::sort(list.begin(), list.end(),
              [](const Posting& a, const Posting& b) { return a.para_id < b.para_id; });
    index.doc_freq_[term] = list.size();
  }
  index.avg_doc_length_ = static_cast<double>(total) / static_cast<double>(docs.size());
  return index;
}

double InvertedIndex::idf(const std::string& term) const {
  auto it = doc_freq_.find(term);
  if (it == doc_freq_.end()) return 0.0;
  const double n = static_cast<double>(doc_count());
  const double df = static_cast<double>(it->second);
  return std::log(1.0 + (n - df + 0.5) / (df + 0.5));
}

std::size_t InvertedIndex::term_frequency(const std::string& term, const ParaId& para_id) const {
  auto it = postings_.find(term);
  if (it == postings_.end()) return 0;
  const auto& list = it->second;
  auto p = std::lower_bound(list.begin(), list.end(), para_id,
                            [](const Posting& a, const ParaId& id) { return a.para_id < id; });
  return (p != list.end() && p->para_id == para_id) ? p->term_frequency : 0;
}

double InvertedIndex::term_weight(double idf, std::size_t tf, std::size_t doc_len) const {
  if (tf == 0) return 0.0;
  const double f = static_cast<double>(tf);
  const double norm = avg_doc_length_ > 0.0 ? static_cast<double>(doc_len) / avg_doc_length_ : 0.0;
  return idf * f * (params_.k1 + 1.0) / (f + params_.k1 * (1.0 - params_.b + params_.b * norm));
}

double InvertedIndex::bm25_score(const std::vector<std::string>& query_terms,
                                 const ParaId& para_id) const {
  auto len = doc_lengths_.find(para_id);
  if (len == doc_lengths_.end()) throw IndexError("unknown para_id: " + para_id);
  double score = 0.0;
  for (const auto& term : unique_terms(query_terms)) {
    score += term_weight(idf(term), term_frequency(term, para_id), len->second);
  }
  return score;
}

std::vector<QueryCandidate> InvertedIndex::search(std::string_view query,
                                                  std::size_t pool_size) const {
  const auto terms = unique_terms(tokenize(query));
  if (terms.empty() || pool_size == 0) return {};

  // Accumulate in a fixed term order so sums are reproducible bit-for-bit
  // with bm25_score.
  std::unordered_map<ParaId, double> acc;
  for (const auto& term : terms) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double w = idf(term);
    for (const auto& p : it->second) {
      acc[p.para_id] += term_weight(w, p.term_frequency, doc_lengths_.at(p.para_id));
    }
  }
  std::vector<QueryCandidate> out;
  out.reserve(acc.size());
  for (const auto& [id, score] : acc) {
    if (score > 0.0) out.push_back({id, score});
  }
  auto order = [](const QueryCandidate& a, const QueryCandidate& b) {
    return a.bm25 != b.bm25 ? a.bm25 > b.bm25 : a.para_id < b.para_id;
  };
  if (out.size() > pool_size) {
    std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(pool_size),
                      out.end(), order);
    out.resize(pool_size);
  } else {
    std::sort(out.begin(), out.end(), order);
  }
  return out;
}

void InvertedIndex::save(const std::filesystem::path& path) const {
  json postings = json::object();
  for (const auto& [term, list] : postings_) {
    json a = json::array();
    for (const auto& p : list) a.push_back(json::array({p.para_id, p.term_frequency}));
    postings[term] = a;
  }
  json j = {{"k1", params_.k1},
            {"b", params_.b},
            {"avg_doc_length", avg_doc_length_},
            {"doc_lengths", doc_lengths_},
            {"postings", postings}};
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IndexError("cannot write " + path.string());
  out << j.dump() << '\n';
}

InvertedIndex InvertedIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IndexError("cannot read " + path.string());
  try {
    const auto j = json::parse(in);
    InvertedIndex index;
    index.params_ = {j.at("k1").get<double>(), j.at("b").get<double>()};
    index.avg_doc_length_ = j.at("avg_doc_length").get<double>();
    index.doc_lengths_ = j.at("doc_lengths").get<std::map<ParaId, std::size_t>>();
    for (const auto& [term, list] : j.at("postings").items()) {
      auto& dst = index.postings_[term];
      for (const auto& p : list) dst.push_back({p.at(0).get<ParaId>(), p.at(1).get<std::size_t>()});
      index.doc_freq_[term] = dst.size();
    }
    return index;
  } catch (const json::exception& e) {
    throw IndexError(path.string() + ": " + e.what());
  }
}

std::vector<IndexDocument> index_documents(const Corpus& corpus) {
  std::vector<IndexDocument> docs;
  docs.reserve(corpus.paragraphs.size());
  for (const auto& [id, p] : corpus.paragraphs) docs.push_back({id, p.display_heading + " " + p.text});
  return docs;
}

InvertedIndex build_index(const Corpus& corpus, Bm25Params params) {
  return InvertedIndex::build(index_documents(corpus), params);
}

}  // namespace parascope
