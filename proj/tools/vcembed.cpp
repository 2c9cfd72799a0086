#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vcs/eval.hpp"
#include "vcs/graph.hpp"
#include "vcs/graph_sampler.hpp"
#include "vcs/manifest.hpp"
#include "vcs/trainers.hpp"
#include "vcs/weighting.hpp"

namespace {

struct TrainArgs {
  std::string model;
  std::string train_path;
  std::string save_path;
  vcs::TrainConfig cfg;
  std::string line_order = "both";
  bool undirected = false;
  bool typed = false;
};

vcs::Graph read_graph(const std::string& path, bool undirected, bool typed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  vcs::ParseOptions options;
  options.undirected = undirected;
  options.typed = typed;
  return vcs::build_graph(vcs::parse_edge_list(in, options));
}

vcs::EmbeddingTable read_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return vcs::load_embedding(in);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

int run_train(const TrainArgs& args) {
  vcs::TrainConfig cfg = args.cfg;
  if (args.line_order == "1") cfg.line_order = vcs::LineOrder::first;
  else if (args.line_order == "2") cfg.line_order = vcs::LineOrder::second;
  else if (args.line_order == "both") cfg.line_order = vcs::LineOrder::both;
  else throw std::runtime_error("--line-order must be 1, 2, or both");

  auto graph = read_graph(args.train_path, args.undirected, args.typed);
  vcs::GraphSampler sampler(graph);

  const auto t0 = std::chrono::steady_clock::now();
  vcs::TrainResult result;
  if (args.model == "deepwalk") result = vcs::train_deepwalk(sampler, cfg);
  else if (args.model == "walklets") result = vcs::train_walklets(sampler, cfg);
  else if (args.model == "line") result = vcs::train_line(sampler, cfg);
  else if (args.model == "hpe") result = vcs::train_hpe(sampler, cfg);
  else throw std::runtime_error("unknown model '" + args.model + "'");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  {
    auto out = open_out(args.save_path);
    vcs::save_embedding(out, result.vertex);
  }

  vcs::RunManifest manifest;
  manifest.set("model", args.model);
  manifest.set("train", args.train_path);
  manifest.set("train_digest", vcs::file_digest(args.train_path));
  manifest.set("save", args.save_path);
  manifest.set("dimensions", std::uint64_t{cfg.dimensions});
  manifest.set("walk_times", std::uint64_t{cfg.walk_times});
  manifest.set("walk_length", std::uint64_t{cfg.walk_length});
  manifest.set("window", std::uint64_t{cfg.window});
  manifest.set("negatives", std::uint64_t{cfg.negatives});
  manifest.set("sample_times", cfg.sample_times);
  manifest.set("alpha", cfg.alpha);
  manifest.set("threads", std::uint64_t{cfg.workers});
  manifest.set("seed", cfg.seed);
  manifest.set("undirected", std::uint64_t{args.undirected ? 1u : 0u});
  manifest.set("typed", std::uint64_t{args.typed ? 1u : 0u});
  manifest.set("line_order", args.line_order);
  if (args.model == "walklets") {
    std::ostringstream offs;
    if (cfg.walklet_offsets.empty()) {
      offs << "1.." << cfg.window;
    } else {
      for (std::size_t i = 0; i < cfg.walklet_offsets.size(); ++i) {
        offs << (i ? "," : "") << cfg.walklet_offsets[i];
      }
    }
    manifest.set("walklet_offsets", offs.str());
  }
  manifest.set("vertices", std::uint64_t{graph.vertex_count()});
  manifest.set("edges", std::uint64_t{graph.edge_count()});
  const auto report = sampler.size_report();
  manifest.set("source_cells", std::uint64_t{report.source_cells});
  manifest.set("context_cells", std::uint64_t{report.context_cells});
  manifest.set("context_refs", std::uint64_t{report.context_refs});
  manifest.set("negative_cells", std::uint64_t{report.negative_cells});
  manifest.set("duration_seconds", seconds);
  auto mout = open_out(args.save_path + ".manifest");
  mout << manifest.serialize();

  std::cout << "saved " << result.vertex.names.size() << " vectors (dim "
            << result.vertex.dim << ") to " << args.save_path << "\n";
  return 0;
}

int run_reweight(const std::string& scheme_name, const std::string& in_path,
                 const std::string& out_path, bool typed) {
  const auto scheme = vcs::weight_scheme_from_string(scheme_name);
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open '" + in_path + "'");
  vcs::ParseOptions options;
  options.typed = typed;
  auto list = vcs::parse_edge_list(in, options);
  auto aggregated = vcs::aggregate_edges(list.edges);
  auto result = vcs::reweight(aggregated, scheme, typed);
  if (result.dropped_zero_weight > 0) {
    std::cerr << "warning: dropped " << result.dropped_zero_weight
              << " zero-weight edges\n";
  }
  auto out = open_out(out_path);
  char buf[64];
  for (const auto& e : result.edges) {
    std::snprintf(buf, sizeof(buf), " %.6f\n", e.weight);
    out << e.source << ' ' << e.target << buf;
  }
  std::cout << "wrote " << result.edges.size() << " edges to " << out_path
            << "\n";
  return 0;
}

int run_eval_sim(const std::string& emb_path, const std::string& bench_path) {
  auto table = read_embedding(emb_path);
  std::ifstream in(bench_path);
  if (!in) throw std::runtime_error("cannot open '" + bench_path + "'");
  auto rows = vcs::load_similarity_benchmark(in);
  auto report = vcs::eval_word_similarity(table, rows);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "rho: %.4f\n", report.rho);
  std::cout << buf << "covered: " << report.covered
            << " skipped: " << report.skipped << "\n";
  return 0;
}

int run_eval_rec(const std::string& emb_path, const std::string& train_path,
                 const std::string& test_path, const vcs::RecEvalParams& params,
                 const std::string& csv_path) {
  auto table = read_embedding(emb_path);
  std::ifstream train_in(train_path);
  if (!train_in) throw std::runtime_error("cannot open '" + train_path + "'");
  std::ifstream test_in(test_path);
  if (!test_in) throw std::runtime_error("cannot open '" + test_path + "'");
  auto split = vcs::load_rec_split(train_in, test_in);
  auto report = vcs::eval_recommendation(table, split, params);
  std::cout << report.to_text();
  if (!csv_path.empty()) {
    auto out = open_out(csv_path);
    out << report.to_csv();
  }
  return 0;
}

int run_stats(const std::string& train_path, bool undirected, bool typed) {
  auto graph = read_graph(train_path, undirected, typed);
  vcs::GraphSampler sampler(graph);
  const auto report = sampler.size_report();
  std::cout << "vertices: " << graph.vertex_count() << "\n"
            << "edges: " << graph.edge_count() << "\n"
            << "source_cells: " << report.source_cells << "\n"
            << "context_cells: " << report.context_cells << "\n"
            << "context_refs: " << report.context_refs << "\n"
            << "negative_cells: " << report.negative_cells << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted network embedding toolkit"};
  app.require_subcommand(1);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "train an embedding model");
  train->add_option("--model", train_args.model,
                    "deepwalk | walklets | line | hpe")->required();
  train->add_option("--train", train_args.train_path, "input edge list")
      ->required();
  train->add_option("--save", train_args.save_path, "output embedding path")
      ->required();
  train->add_option("--dimensions", train_args.cfg.dimensions,
                    "embedding dimension")->capture_default_str();
  train->add_option("--walk-times", train_args.cfg.walk_times,
                    "epochs over the vertex set")->capture_default_str();
  train->add_option("--walk-length", train_args.cfg.walk_length,
                    "hops per walk")->capture_default_str();
  train->add_option("--window", train_args.cfg.window, "context window")->capture_default_str();
  train->add_option("--negatives", train_args.cfg.negatives,
                    "negatives per positive")->capture_default_str();
  train->add_option("--sample-times", train_args.cfg.sample_times,
                    "pair draws in millions (line/hpe)")->capture_default_str();
  train->add_option("--alpha", train_args.cfg.alpha, "initial learning rate")->capture_default_str();
  train->add_option("--threads", train_args.cfg.workers, "worker count")->capture_default_str();
  train->add_option("--seed", train_args.cfg.seed, "random seed")->capture_default_str();
  train->add_flag("--undirected", train_args.undirected,
                  "materialize both directions of every input line");
  train->add_flag("--typed", train_args.typed,
                  "column position assigns a vertex partition");
  train->add_option("--line-order", train_args.line_order, "1 | 2 | both")->capture_default_str();
  train->add_option("--walklet-offsets", train_args.cfg.walklet_offsets,
                    "offset subset for walklets (default all of 1..window)")
      ->delimiter(',');

  std::string rw_scheme, rw_in, rw_out;
  bool rw_typed = false;
  auto* reweight = app.add_subcommand("reweight", "transform edge weights");
  reweight->add_option("--scheme", rw_scheme,
                       "binary | tf | tfidf | rating | rating-irf")
      ->required();
  reweight->add_option("--in", rw_in, "input edge list")->required();
  reweight->add_option("--out", rw_out, "output edge list")->required();
  reweight->add_flag("--typed", rw_typed,
                     "treat columns as user/item partitions");

  std::string sim_emb, sim_bench;
  auto* eval_sim =
      app.add_subcommand("eval-sim", "word similarity (Spearman rho)");
  eval_sim->add_option("--embeddings", sim_emb, "embedding file")->required();
  eval_sim->add_option("--benchmark", sim_bench,
                       "`word1 word2 score` benchmark file")->required();

  std::string rec_emb, rec_train, rec_test, rec_scorer = "dot", rec_csv;
  vcs::RecEvalParams rec_params;
  auto* eval_rec =
      app.add_subcommand("eval-rec", "recommendation metrics at cutoffs");
  eval_rec->add_option("--embeddings", rec_emb, "embedding file")->required();
  eval_rec->add_option("--train", rec_train, "training interactions")
      ->required();
  eval_rec->add_option("--test", rec_test, "held-out interactions")
      ->required();
  eval_rec->add_option("--queries", rec_params.queries,
                       "query items drawn per user")->capture_default_str();
  eval_rec->add_option("--k", rec_params.ks, "cutoff list")->capture_default_str()
      ->delimiter(',');
  eval_rec->add_option("--runs", rec_params.runs, "seeded repetitions")->capture_default_str();
  eval_rec->add_option("--seed", rec_params.seed, "base seed")->capture_default_str();
  eval_rec->add_option("--scorer", rec_scorer, "dot | cosine")->capture_default_str();
  eval_rec->add_option("--csv", rec_csv, "also write metric,k,value rows");

  std::string stats_train;
  bool stats_undirected = false, stats_typed = false;
  auto* stats =
      app.add_subcommand("stats", "sampling-structure size report");
  stats->add_option("--train", stats_train, "input edge list")->required();
  stats->add_flag("--undirected", stats_undirected,
                  "materialize both directions of every input line");
  stats->add_flag("--typed", stats_typed,
                  "column position assigns a vertex partition");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train->parsed()) return run_train(train_args);
    if (reweight->parsed()) {
      return run_reweight(rw_scheme, rw_in, rw_out, rw_typed);
    }
    if (eval_sim->parsed()) return run_eval_sim(sim_emb, sim_bench);
    if (eval_rec->parsed()) {
      if (rec_scorer == "dot") rec_params.scorer = vcs::Scorer::dot;
      else if (rec_scorer == "cosine") rec_params.scorer = vcs::Scorer::cosine;
      else throw std::runtime_error("--scorer must be dot or cosine");
      return run_eval_rec(rec_emb, rec_train, rec_test, rec_params, rec_csv);
    }
    if (stats->parsed()) return run_stats(stats_train, stats_undirected,
                                          stats_typed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
