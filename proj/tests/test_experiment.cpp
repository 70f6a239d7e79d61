#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "linkpred/experiment.hpp"
#include "linkpred/split.hpp"
#include "test_util.hpp"

using namespace linkpred;

namespace {

ExperimentConfig fixture_config() {
  ExperimentConfig cfg;
  cfg.dataset = "fixture";
  cfg.runs = 10;
  cfg.probe_fraction = 0.1;
  cfg.predictors = {ScorerKind::mi};
  cfg.seed = 42;
  return cfg;
}

nlohmann::json strip_elapsed(nlohmann::json j) {
  for (auto& pred : j["results"])
    for (auto& run : pred["runs"]) run.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("a 10-run experiment yields 10 well-formed rows") {
  const ExperimentReport rep = run_experiment(canonical_fixture(), fixture_config());
  REQUIRE(rep.predictors.size() == 1);
  REQUIRE(rep.predictors[0].runs.size() == 10);
  for (const auto& row : rep.predictors[0].runs) {
    CHECK(row.auc >= 0.0);
    CHECK(row.auc <= 1.0);
    CHECK(row.precision >= 0.0);
    CHECK(row.precision <= 1.0);
  }
  CHECK(rep.effective_l == 19);  // default 100 clamped to the candidate count
  CHECK(rep.auc_mode == "exact");
}

TEST_CASE("run i uses seed + i, shared across predictors") {
  ExperimentConfig cfg = fixture_config();
  cfg.predictors = {ScorerKind::cn, ScorerKind::mi, ScorerKind::car};
  cfg.runs = 5;
  const ExperimentReport rep = run_experiment(canonical_fixture(), cfg);
  for (const auto& pred : rep.predictors)
    for (std::uint32_t i = 0; i < cfg.runs; ++i)
      CHECK(pred.runs[i].seed == cfg.seed + i);
}

TEST_CASE("metrics are identical across thread counts") {
  ExperimentConfig cfg = fixture_config();
  cfg.predictors = {ScorerKind::cn, ScorerKind::mi};
  cfg.threads = 1;
  const ExperimentReport a = run_experiment(canonical_fixture(), cfg);
  cfg.threads = 8;
  const ExperimentReport b = run_experiment(canonical_fixture(), cfg);
  REQUIRE(a.predictors.size() == b.predictors.size());
  for (std::size_t p = 0; p < a.predictors.size(); ++p)
    for (std::size_t i = 0; i < a.predictors[p].runs.size(); ++i) {
      CHECK(a.predictors[p].runs[i].auc == b.predictors[p].runs[i].auc);
      CHECK(a.predictors[p].runs[i].precision ==
            b.predictors[p].runs[i].precision);
    }
}

TEST_CASE("repeated runs serialize byte-identically modulo elapsed fields") {
  const ExperimentConfig cfg = fixture_config();
  const auto a = strip_elapsed(report_to_json(run_experiment(canonical_fixture(), cfg)));
  const auto b = strip_elapsed(report_to_json(run_experiment(canonical_fixture(), cfg)));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("aggregates are recomputable from the rows") {
  ExperimentConfig cfg = fixture_config();
  cfg.runs = 12;
  const ExperimentReport rep = run_experiment(canonical_fixture(), cfg);
  for (const auto& pred : rep.predictors) {
    double mean = 0;
    for (const auto& r : pred.runs) mean += r.auc;
    mean /= double(pred.runs.size());
    double ss = 0;
    for (const auto& r : pred.runs) ss += (r.auc - mean) * (r.auc - mean);
    const double sd = std::sqrt(ss / double(pred.runs.size() - 1));
    CHECK(std::fabs(pred.auc_mean - mean) <= 1e-12);
    CHECK(std::fabs(pred.auc_std - sd) <= 1e-12);
  }
}

TEST_CASE("csv has one row per run plus flagged aggregate rows") {
  ExperimentConfig cfg = fixture_config();
  cfg.predictors = {ScorerKind::cn, ScorerKind::mi};
  cfg.runs = 4;
  const std::string csv = report_to_csv(run_experiment(canonical_fixture(), cfg));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "predictor,seed,auc,precision,elapsed_ms");
  std::size_t rows = 0, means = 0, stds = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find(",mean,") != std::string::npos) ++means;
    if (line.find(",std,") != std::string::npos) ++stds;
  }
  CHECK(rows == 2 * 4 + 2 * 2);
  CHECK(means == 2);
  CHECK(stds == 2);
}

TEST_CASE("json keys come out sorted (canonical form)") {
  const auto j = report_to_json(run_experiment(canonical_fixture(), fixture_config()));
  const std::string s = j.dump();
  CHECK(s.find("\"auc_mode\"") < s.find("\"config\""));
  CHECK(s.find("\"config\"") < s.find("\"effective_l\""));
  CHECK(s.find("\"effective_l\"") < s.find("\"results\""));
}

TEST_CASE("forced auc modes are honored") {
  ExperimentConfig cfg = fixture_config();
  cfg.auc_mode = AucMode::sampled;
  cfg.auc_samples = 5000;
  const ExperimentReport rep = run_experiment(canonical_fixture(), cfg);
  CHECK(rep.auc_mode == "sampled:5000");
  cfg.auc_mode = AucMode::exact;
  CHECK(run_experiment(canonical_fixture(), cfg).auc_mode == "exact");
}

TEST_CASE("invalid configurations are rejected") {
  ExperimentConfig cfg = fixture_config();
  cfg.runs = 0;
  CHECK_THROWS_AS(run_experiment(canonical_fixture(), cfg), std::domain_error);
  cfg = fixture_config();
  cfg.predictors.clear();
  CHECK_THROWS_AS(run_experiment(canonical_fixture(), cfg), std::domain_error);
  cfg = fixture_config();
  cfg.probe_fraction = 1.5;
  CHECK_THROWS_AS(run_experiment(canonical_fixture(), cfg), std::domain_error);
  cfg = fixture_config();
  cfg.probe_fraction = 0.04;  // probe rounds to zero edges on M=10
  CHECK_THROWS_AS(run_experiment(canonical_fixture(), cfg), SplitError);
}
