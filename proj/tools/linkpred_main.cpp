// Command-line front end: stats | run | score | complexity.
//
// Exit codes: 0 ok, 2 I/O or unusable input data, 3 protocol errors
// (e.g. empty probe set, infeasible benchmark grid), 4 usage errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "linkpred/complexity.hpp"
#include "linkpred/evaluation.hpp"
#include "linkpred/experiment.hpp"
#include "linkpred/split.hpp"
#include "linkpred/stats.hpp"

namespace {

using namespace linkpred;

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitProtocol = 3;
constexpr int kExitUsage = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot write " + out_path);
  out << text;
}

Graph load_dataset(const std::string& path, bool no_gc) {
  Graph g = load_edge_list_file(path);
  if (g.node_count() == 0) throw IoError(path + ": empty graph");
  return no_gc ? g : giant_component(g);
}

std::vector<ScorerKind> parse_predictor_list(const std::vector<std::string>& names) {
  std::vector<ScorerKind> kinds;
  for (const auto& n : names) {
    auto k = parse_scorer(n);
    if (!k) throw CLI::ValidationError("unknown predictor '" + n + "'");
    kinds.push_back(*k);
  }
  return kinds;
}

int cmd_stats(const std::string& dataset, bool no_gc, int threads,
              const std::string& out_path) {
  try {
    const Graph g = load_dataset(dataset, no_gc);
    const NetworkStats s = network_stats(g, threads);
    write_output(stats_to_json(s).dump(2), out_path);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << dataset << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;  // degenerate input graph
  }
}

struct RunOpts {
  std::string dataset;
  std::uint32_t runs = 100;
  double fraction = 0.1;
  std::vector<std::string> predictors;
  std::uint64_t seed = 1;
  std::size_t top_l = 100;
  std::string auc = "auto";
  int threads = 0;
  std::string out_path;
  std::string format = "json";
  bool no_gc = false;
};

int cmd_run(const RunOpts& o) {
  ExperimentConfig cfg;
  cfg.dataset = o.dataset;
  cfg.runs = o.runs;
  cfg.probe_fraction = o.fraction;
  cfg.seed = o.seed;
  cfg.top_l = o.top_l;
  cfg.threads = o.threads;
  try {
    cfg.predictors = o.predictors.empty()
                         ? std::vector<ScorerKind>(kAllScorers.begin(),
                                                   kAllScorers.end())
                         : parse_predictor_list(o.predictors);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (o.auc == "auto") {
    cfg.auc_mode = AucMode::automatic;
  } else if (o.auc == "exact") {
    cfg.auc_mode = AucMode::exact;
  } else if (o.auc.starts_with("sampled:")) {
    cfg.auc_mode = AucMode::sampled;
    try {
      cfg.auc_samples = std::stoull(o.auc.substr(8));
    } catch (...) {
      std::cerr << "error: bad --auc value '" << o.auc << "'\n";
      return kExitUsage;
    }
    if (cfg.auc_samples < 1) {
      std::cerr << "error: sampled AUC needs at least one comparison\n";
      return kExitUsage;
    }
  } else {
    std::cerr << "error: --auc expects exact|sampled:N\n";
    return kExitUsage;
  }

  try {
    const Graph g = load_dataset(o.dataset, o.no_gc);
    const ExperimentReport rep = run_experiment(g, cfg);
    write_output(o.format == "csv" ? report_to_csv(rep)
                                   : report_to_json(rep).dump(2),
                 o.out_path);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << o.dataset << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const SplitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  }
}

struct ScoreOpts {
  std::string dataset;
  std::string predictor;
  std::string pairs_file;
  std::size_t top_k = 0;
  int threads = 0;
  std::string out_path;
};

int cmd_score(const ScoreOpts& o) {
  auto kind = parse_scorer(o.predictor);
  if (!kind) {
    std::cerr << "error: unknown predictor '" << o.predictor << "'\n";
    return kExitUsage;
  }
  try {
    // The whole graph acts as the training set here.
    const Graph g = load_edge_list_file(o.dataset);
    if (g.node_count() == 0) {
      std::cerr << "error: " << o.dataset << ": empty graph\n";
      return kExitIo;
    }
    const Scorer scorer = Scorer::build(*kind, g, o.threads);
    std::ostringstream out;
    out.precision(10);

    if (!o.pairs_file.empty()) {
      std::ifstream pf(o.pairs_file);
      if (!pf) throw IoError("cannot open " + o.pairs_file);
      std::string la, lb;
      while (pf >> la >> lb) {
        auto x = g.find_label(la);
        auto y = g.find_label(lb);
        if (!x || !y)
          throw std::domain_error("unknown node label '" + (x ? lb : la) + "'");
        const bool existing = g.has_edge(*x, *y);
        if (existing)
          std::cerr << "warning: " << la << " " << lb
                    << " is an existing edge; scored anyway\n";
        out << la << '\t' << lb << '\t' << scorer(*x, *y)
            << (existing ? "\tedge" : "") << '\n';
      }
    } else {
      RankedCandidates ranked = rank_candidates(g, scorer, {}, o.threads);
      const std::size_t k = std::min(o.top_k, ranked.entries.size());
      for (std::size_t i = 0; i < k; ++i) {
        const auto& e = ranked.entries[i];
        out << g.label(e.pair.a) << '\t' << g.label(e.pair.b) << '\t' << e.score
            << '\n';
      }
    }
    write_output(out.str(), o.out_path);
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << o.dataset << ": " << e.what() << '\n';
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  }
}

struct ComplexityOpts {
  std::vector<std::uint32_t> sizes;
  std::vector<double> degrees;
  std::uint64_t seed = 1;
  int repeats = 7;
  int threads = 0;
  std::string out_path;
};

int cmd_complexity(const ComplexityOpts& o) {
  ComplexityConfig cfg;
  cfg.sizes = o.sizes;
  cfg.avg_degrees = o.degrees;
  cfg.seed = o.seed;
  cfg.repeats = o.repeats;
  cfg.threads = o.threads;
  try {
    const ComplexityReport rep = run_complexity(cfg);
    std::cout << complexity_table(rep);
    if (!o.out_path.empty())
      write_output(complexity_to_json(rep).dump(2), o.out_path);
    return kExitOk;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProtocol;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link prediction toolkit: mutual-information and "
               "common-neighbor predictors with a reproducible evaluation "
               "harness"};
  app.require_subcommand(1);

  std::string dataset, out_path;
  int threads = 0;
  bool no_gc = false;

  auto* stats = app.add_subcommand("stats", "Topology statistics of a dataset");
  stats->add_option("file", dataset, "edge-list file")->required();
  stats->add_flag("--no-gc", no_gc, "keep the whole graph, not its giant component");
  stats->add_option("--threads", threads, "worker threads (default: LINKPRED_THREADS or all cores)");
  stats->add_option("--out", out_path, "write JSON here instead of stdout");

  RunOpts run;
  auto* runc = app.add_subcommand("run", "Repeated split/score/evaluate experiment");
  runc->add_option("file", run.dataset, "edge-list file")->required();
  runc->add_option("--runs", run.runs, "independent runs (default 100)");
  runc->add_option("--fraction", run.fraction, "probe fraction (default 0.1)");
  runc->add_option("--predictors", run.predictors,
                   "subset of cn,ra,lnb-cn,lnb-ra,car,cra,mi (default all)")
      ->delimiter(',');
  runc->add_option("--seed", run.seed, "base seed; run i uses seed+i");
  runc->add_option("--top-l", run.top_l, "precision cutoff (default 100)");
  runc->add_option("--auc", run.auc, "exact | sampled:N (default: exact up to 1e8 comparisons)");
  runc->add_option("--threads", run.threads, "worker threads");
  runc->add_option("--out", run.out_path, "output file (default stdout)");
  runc->add_option("--format", run.format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));
  runc->add_flag("--no-gc", run.no_gc, "keep the whole graph");

  ScoreOpts sc;
  auto* score = app.add_subcommand("score", "Score pairs or emit a top-K ranking");
  score->add_option("file", sc.dataset, "edge-list file")->required();
  score->add_option("--predictor", sc.predictor, "one of cn,ra,lnb-cn,lnb-ra,car,cra,mi")
      ->required();
  auto* pairs_opt = score->add_option("--pairs", sc.pairs_file, "file of 'label label' lines");
  auto* top_opt = score->add_option("--top", sc.top_k, "emit the K best-scored non-edges");
  pairs_opt->excludes(top_opt);
  score->add_option("--threads", sc.threads, "worker threads");
  score->add_option("--out", sc.out_path, "output file (default stdout)");

  ComplexityOpts cx;
  auto* cplx = app.add_subcommand("complexity", "Scaling benchmark of mi/car/cra scoring");
  cplx->add_option("--sizes", cx.sizes, "graph sizes N")->required()->delimiter(',');
  cplx->add_option("--degrees", cx.degrees, "average degrees <k>")->required()->delimiter(',');
  cplx->add_option("--seed", cx.seed, "generator seed");
  cplx->add_option("--repeats", cx.repeats, "timing repetitions per cell (median)");
  cplx->add_option("--threads", cx.threads, "worker threads");
  cplx->add_option("--out", cx.out_path, "also write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (stats->parsed()) return cmd_stats(dataset, no_gc, threads, out_path);
  if (runc->parsed()) return cmd_run(run);
  if (score->parsed()) {
    if (sc.pairs_file.empty() && sc.top_k == 0) {
      std::cerr << "error: score needs --pairs FILE or --top K\n";
      return kExitUsage;
    }
    return cmd_score(sc);
  }
  if (cplx->parsed()) return cmd_complexity(cx);
  return kExitUsage;
}
