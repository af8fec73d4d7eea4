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

#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "parascope/bundle.hpp"
#include "parascope/config.hpp"
#include "parascope/http_server.hpp"
#include "parascope/ingest.hpp"
#include "parascope/service.hpp"
#include "parascope/sim.hpp"

namespace {

parascope::HttpServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

int run_ingest(const std::string& corpus_path, const std::string& out_dir,
               const std::string& self_ref_list, const std::string& embeddings) {
  parascope::IngestOptions options;
  if (!self_ref_list.empty()) {
    options.self_references = parascope::SelfReferenceMatcher::from_file(self_ref_list);
  }
  if (!embeddings.empty()) options.embeddings_sidecar = embeddings;
  auto corpus = parascope::load_corpus(corpus_path, options);
  const auto stats = corpus.stats;
  const auto unresolved = corpus.unresolved_refs.size();
  auto bundle = parascope::make_bundle(std::move(corpus));
  parascope::write_bundle(bundle, out_dir);
  std::cout << "papers read:         " << stats.papers_read << '\n'
            << "paragraphs kept:     " << stats.paragraphs_kept << '\n'
            << "paragraphs dropped:  " << stats.paragraphs_dropped << '\n'
            << "unresolved mentions: " << stats.unresolved_mentions << " (" << unresolved
            << " distinct ids)\n"
            << "tau_highlight=" << bundle.calibration.tau_highlight
            << " d_norm=" << bundle.calibration.d_norm
            << " theta_sim=" << bundle.calibration.theta_sim << '\n';
  return 0;
}

int run_serve(const std::string& config_path) {
  auto config = parascope::load_config(config_path);
  config.validate();
  auto bundle = parascope::read_bundle(config.index_dir);
  const auto similarity = config.resolve_similarity(bundle.calibration);
  parascope::Service service(std::move(bundle),
                             {config.ranking, similarity, config.event_log_dir, {}, {}});
  parascope::HttpServer server(service);
  g_server = &server;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  std::cout << "listening on " << config.host << ':' << config.port << std::endl;
  if (!server.listen(config.host, config.port)) {
    std::cerr << "could not listen on " << config.host << ':' << config.port << '\n';
    return 1;
  }
  return 0;
}

int run_simulate(std::uint64_t seed, const std::string& strategy_name,
                 const std::string& policy_name, std::uint64_t policy_seed, std::size_t steps,
                 const std::string& out, std::size_t papers, std::size_t paragraphs,
                 std::size_t clusters) {
  const auto strategy = parascope::sim_strategy_from_string(strategy_name);
  if (!strategy) throw CLI::ValidationError("--strategy", "unknown strategy " + strategy_name);
  const auto policy = policy_name == "greedy_top"
                          ? parascope::SimPolicy::greedy_top()
                          : parascope::SimPolicy::uniform_random(policy_seed);
  const auto corpus = parascope::generate_synthetic_corpus(seed, papers, paragraphs, clusters);
  const auto report = parascope::run_simulation(corpus, parascope::kSyntheticQuery, policy,
                                                *strategy, steps);
  std::ofstream file(out);
  if (!file) {
    std::cerr << "cannot write " << out << '\n';
    return 1;
  }
  parascope::write_report_csv(report, file);
  std::cout << parascope::to_string(*strategy) << ": " << report.steps.size() << " steps, "
            << report.total_refs << " reachable references, 90% coverage "
            << (report.steps_to_90 ? "at step " + std::to_string(*report.steps_to_90)
                                   : std::string("not reached"))
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parascope: explore related-work paragraphs"};
  app.require_subcommand(1);

  std::string corpus_path, out_dir, self_ref_list, embeddings;
  auto* ingest = app.add_subcommand("ingest", "Parse a corpus and write an index directory");
  ingest->add_option("--corpus", corpus_path, "JSONL corpus, one paper per line")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_option("--out", out_dir, "Index directory to write")->required();
  ingest->add_option("--self-ref-list", self_ref_list, "Self-reference phrases, one per line")
      ->check(CLI::ExistingFile);
  ingest->add_option("--embeddings", embeddings, "Sidecar JSONL of paper_id/embedding rows")
      ->check(CLI::ExistingFile);

  std::string config_path;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--config", config_path, "Service config file")
      ->required()
      ->check(CLI::ExistingFile);

  std::uint64_t seed = 1, policy_seed = 0;
  std::string strategy = "dynamic_mmr", policy = "greedy_top", report_path = "report.csv";
  std::size_t steps = 200, papers = 500, paragraphs = 200, clusters = 8;
  auto* simulate = app.add_subcommand("simulate", "Simulated exploration on a synthetic corpus");
  simulate->add_option("--seed", seed, "Synthetic corpus seed");
  simulate->add_option("--strategy", strategy, "static_bm25 or dynamic_mmr")
      ->check(CLI::IsMember({"static_bm25", "dynamic_mmr"}));
  simulate->add_option("--policy", policy, "greedy_top or random")
      ->check(CLI::IsMember({"greedy_top", "random"}));
  simulate->add_option("--policy-seed", policy_seed, "Seed for the random policy");
  simulate->add_option("--steps", steps, "Interaction steps");
  simulate->add_option("--out", report_path, "CSV report path");
  simulate->add_option("--papers", papers, "Synthetic papers");
  simulate->add_option("--paragraphs", paragraphs, "Synthetic paragraphs");
  simulate->add_option("--clusters", clusters, "Synthetic clusters");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest) return run_ingest(corpus_path, out_dir, self_ref_list, embeddings);
    if (*serve) return run_serve(config_path);
    if (*simulate) {
      return run_simulate(seed, strategy, policy, policy_seed, steps, report_path, papers,
                          paragraphs, clusters);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
