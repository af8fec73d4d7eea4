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

#include "parascope/bundle.hpp"

#include <fstream>

#include <json.hpp>

#include "parascope/corpus_io.hpp"

namespace parascope {

using nlohmann::json;

IndexBundle make_bundle(Corpus corpus) {
  IndexBundle b;
  b.index = build_index(corpus);
  b.calibration = calibrate_similarity(corpus);
  b.corpus = std::move(corpus);
  return b;
}

void write_bundle(const IndexBundle& bundle, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  save_corpus(bundle.corpus, dir / "corpus.json");
  bundle.index.save(dir / "index.json");
  const auto& s = bundle.corpus.stats;
  json manifest = {
      {"format_version", 1},
      {"stats",
       {{"papers_read", s.papers_read},
        {"paragraphs_seen", s.paragraphs_seen},
        {"paragraphs_kept", s.paragraphs_kept},
        {"paragraphs_dropped", s.paragraphs_dropped},
        {"unresolved_mentions", s.unresolved_mentions}}},
      {"calibration",
       {{"tau_highlight", bundle.calibration.tau_highlight},
        {"d_norm", bundle.calibration.d_norm},
        {"theta_sim", bundle.calibration.theta_sim}}}};
  std::ofstream out(dir / "manifest.json", std::ios::trunc);
  if (!out) throw IndexError("cannot write manifest in " + dir.string());
  out << manifest.dump(2) << '\n';
}

IndexBundle read_bundle(const std::filesystem::path& dir) {
  IndexBundle b;
  b.corpus = load_processed_corpus(dir / "corpus.json");
  b.index = InvertedIndex::load(dir / "index.json");
  std::ifstream in(dir / "manifest.json");
  if (!in) throw IndexError("cannot read manifest in " + dir.string());
  try {
    const auto m = json::parse(in);
    if (m.at("format_version").get<int>() != 1) throw IndexError("unsupported index format");
    const auto& c = m.at("calibration");
    b.calibration = {c.at("tau_highlight").get<double>(), c.at("d_norm").get<double>(),
                     c.at("theta_sim").get<double>()};
  } catch (const json::exception& e) {
    throw IndexError("manifest: " + std::string(e.what()));
  }
  if (b.index.doc_count() != b.corpus.paragraphs.size()) {
    throw IndexError("index and corpus disagree on paragraph count");
  }
  return b;
}

}  // namespace parascope
