#include "linkpred/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>

#include "linkpred/evaluation.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/split.hpp"

namespace linkpred {

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
      .count();
}

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = 0;
  for (double x : xs) mean += x;
  mean /= double(xs.size());
  if (xs.size() < 2) {
    sd = 0;
    return;
  }
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  sd = std::sqrt(ss / double(xs.size() - 1));
}

}  // namespace

ExperimentReport run_experiment(const Graph& g, const ExperimentConfig& cfg) {
  if (cfg.runs < 1) throw std::domain_error("run_experiment: runs must be >= 1");
  if (cfg.predictors.empty())
    throw std::domain_error("run_experiment: no predictors given");
  if (!(cfg.probe_fraction > 0 && cfg.probe_fraction < 1))
    throw std::domain_error("run_experiment: probe_fraction must lie in (0, 1)");

  ExperimentReport rep;
  rep.config = cfg;
  rep.predictors.resize(cfg.predictors.size());
  for (std::size_t p = 0; p < cfg.predictors.size(); ++p)
    rep.predictors[p].kind = cfg.predictors[p];

  // The candidate universe has a fixed size across runs: C(N,2) - |E^T|.
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  const auto probe_count =
      std::size_t(std::floor(cfg.probe_fraction * double(m) + 0.5));
  const std::size_t candidates =
      n * (n - 1) / 2 - (m - std::min(probe_count, m));
  rep.effective_l = std::min(cfg.top_l, candidates);
  if (rep.effective_l == 0)
    throw std::domain_error("run_experiment: no candidate pairs to rank");

  bool sampled;
  switch (cfg.auc_mode) {
    case AucMode::exact: sampled = false; break;
    case AucMode::sampled: sampled = true; break;
    case AucMode::automatic:
    default:
      sampled = double(probe_count) * double(candidates - probe_count) > 1e8;
      break;
  }
  rep.auc_mode = sampled ? "sampled:" + std::to_string(cfg.auc_samples) : "exact";

  for (std::uint32_t run = 0; run < cfg.runs; ++run) {
    const std::uint64_t run_seed = cfg.seed + run;
    const SplitResult sp = split(g, cfg.probe_fraction, run_seed);
    const PairKeySet probe_keys = make_pair_key_set(sp.probe);

    for (std::size_t p = 0; p < cfg.predictors.size(); ++p) {
      const double t0 = now_ms();
      const Scorer scorer = Scorer::build(cfg.predictors[p], sp.train, cfg.threads);
      RankedCandidates ranked = rank_candidates(sp.train, scorer, {}, cfg.threads);

      std::vector<double> probe_scores, nonexistent_scores;
      probe_scores.reserve(sp.probe.size());
      nonexistent_scores.reserve(ranked.entries.size() - sp.probe.size());
      for (const auto& e : ranked.entries) {
        if (probe_keys.contains(pair_key(e.pair)))
          probe_scores.push_back(e.score);
        else
          nonexistent_scores.push_back(e.score);
      }

      double auc;
      if (sampled) {
        const std::uint64_t auc_seed =
            rng::mix64(run_seed ^ (0x517CC1B727220A95ull * (p + 1)));
        auc = auc_sampled(probe_scores, nonexistent_scores, cfg.auc_samples,
                          auc_seed, cfg.threads);
      } else {
        auc = auc_exact(probe_scores, nonexistent_scores);
      }
      const double prec = precision_at(ranked, rep.effective_l, probe_keys);
      rep.predictors[p].runs.push_back(
          {run_seed, auc, prec, now_ms() - t0});
    }
  }

  for (auto& pr : rep.predictors) {
    std::vector<double> aucs, precs;
    for (const auto& r : pr.runs) {
      aucs.push_back(r.auc);
      precs.push_back(r.precision);
    }
    mean_std(aucs, pr.auc_mean, pr.auc_std);
    mean_std(precs, pr.precision_mean, pr.precision_std);
  }
  return rep;
}

nlohmann::json report_to_json(const ExperimentReport& r) {
  nlohmann::json preds = nlohmann::json::array();
  for (const auto& p : r.predictors) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& row : p.runs)
      runs.push_back({{"seed", row.seed},
                      {"auc", row.auc},
                      {"precision", row.precision},
                      {"elapsed_ms", row.elapsed_ms}});
    preds.push_back({{"predictor", std::string(scorer_name(p.kind))},
                     {"auc_mean", p.auc_mean},
                     {"auc_std", p.auc_std},
                     {"precision_mean", p.precision_mean},
                     {"precision_std", p.precision_std},
                     {"runs", runs}});
  }
  nlohmann::json names = nlohmann::json::array();
  for (ScorerKind k : r.config.predictors)
    names.push_back(std::string(scorer_name(k)));
  return {{"config",
           {{"dataset", r.config.dataset},
            {"probe_fraction", r.config.probe_fraction},
            {"runs", r.config.runs},
            {"seed", r.config.seed},
            {"top_l", r.config.top_l},
            {"predictors", names}}},
          {"auc_mode", r.auc_mode},
          {"effective_l", r.effective_l},
          {"results", preds}};
}

std::string report_to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "predictor,seed,auc,precision,elapsed_ms\n";
  for (const auto& p : r.predictors) {
    for (const auto& row : p.runs)
      out << scorer_name(p.kind) << ',' << row.seed << ','
          << format_double(row.auc) << ',' << format_double(row.precision)
          << ',' << format_double(row.elapsed_ms) << '\n';
    double el_mean, el_std;
    std::vector<double> els;
    for (const auto& row : p.runs) els.push_back(row.elapsed_ms);
    mean_std(els, el_mean, el_std);
    out << scorer_name(p.kind) << ",mean," << format_double(p.auc_mean) << ','
        << format_double(p.precision_mean) << ',' << format_double(el_mean)
        << '\n';
    out << scorer_name(p.kind) << ",std," << format_double(p.auc_std) << ','
        << format_double(p.precision_std) << ',' << format_double(el_std)
        << '\n';
  }
  return out.str();
}

}  // namespace linkpred
