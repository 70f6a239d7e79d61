#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/predictors.hpp"

namespace linkpred {

enum class AucMode { automatic, exact, sampled };

struct ExperimentConfig {
  std::string dataset;  // echoed into reports only
  double probe_fraction = 0.1;
  std::uint32_t runs = 100;
  std::vector<ScorerKind> predictors;
  std::uint64_t seed = 1;
  std::size_t top_l = 100;
  AucMode auc_mode = AucMode::automatic;
  std::uint64_t auc_samples = 672'400;
  int threads = 0;
};

struct RunRow {
  std::uint64_t seed = 0;
  double auc = 0;
  double precision = 0;
  double elapsed_ms = 0;
};

struct PredictorReport {
  ScorerKind kind = ScorerKind::cn;
  std::vector<RunRow> runs;
  double auc_mean = 0, auc_std = 0;
  double precision_mean = 0, precision_std = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::size_t effective_l = 0;   // top_l clamped to the candidate count
  std::string auc_mode;          // "exact" or "sampled:<n>"
  std::vector<PredictorReport> predictors;
};

/// Runs the full protocol: run i splits with seed+i, every predictor is
/// evaluated on that same split (paired comparison), metrics are AUC and
/// precision@l. Deterministic for a given (graph, config) regardless of the
/// thread count. In automatic mode AUC is exact when
/// |probe| * |nonexistent| <= 1e8 and sampled with `auc_samples` draws
/// otherwise.
ExperimentReport run_experiment(const Graph& g, const ExperimentConfig& cfg);

/// Canonical JSON (sorted keys). Identical configs give byte-identical
/// output except for the elapsed_ms fields.
nlohmann::json report_to_json(const ExperimentReport& r);

/// Columns: predictor,seed,auc,precision,elapsed_ms. One row per run;
/// aggregate rows carry "mean"/"std" in the seed column.
std::string report_to_csv(const ExperimentReport& r);

}  // namespace linkpred
