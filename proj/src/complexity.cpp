#include "linkpred/complexity.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "linkpred/evaluation.hpp"
#include "linkpred/random_graph.hpp"
#include "linkpred/rng.hpp"

namespace linkpred {

namespace {

constexpr std::array<ScorerKind, 3> kBenchScorers = {ScorerKind::mi,
                                                     ScorerKind::car,
                                                     ScorerKind::cra};

}  // namespace

ComplexityReport run_complexity(const ComplexityConfig& cfg) {
  if (cfg.sizes.empty() || cfg.avg_degrees.empty())
    throw std::domain_error("complexity: need at least one size and one degree");
  for (double k : cfg.avg_degrees)
    if (k <= 0) throw std::domain_error("complexity: degrees must be positive");

  // Rough work model: pairs * (merge + per-neighbor) ops per scorer pass.
  double est_ops = 0;
  for (auto n : cfg.sizes)
    for (double k : cfg.avg_degrees)
      est_ops += double(n) * double(n) / 2.0 * (4.0 * k + 40.0) *
                 double(std::max(cfg.repeats, 1)) * kBenchScorers.size();
  const double est_seconds = est_ops * 1e-9;
  if (est_seconds > cfg.max_estimated_seconds) {
    std::ostringstream msg;
    msg << "complexity: grid infeasible, estimated " << std::llround(est_seconds)
        << " s of scoring (cap " << std::llround(cfg.max_estimated_seconds)
        << " s); shrink sizes/degrees or raise the cap";
    throw InfeasibleError(msg.str());
  }

  using clock = std::chrono::steady_clock;
  ComplexityReport rep;
  double sink = 0;  // consumed below so scoring cannot be optimized away

  // All graphs up front, then full sweeps over every (n, <k>, scorer) cell
  // with a min reduction across sweeps: transient system noise hits a whole
  // sweep, not one cell, and the min discards it.
  struct Cell {
    std::uint32_t n;
    double k;
    ScorerKind kind;
    const Graph* g;
    double best = std::numeric_limits<double>::infinity();
  };
  std::vector<Graph> graphs;
  graphs.reserve(cfg.sizes.size() * cfg.avg_degrees.size());
  std::vector<Cell> cells;
  for (auto n : cfg.sizes)
    for (double k : cfg.avg_degrees) {
      const double p = std::min(1.0, k / double(n - 1));
      const std::uint64_t gseed =
          rng::mix64(cfg.seed ^ rng::stream_at(n, std::uint64_t(k * 1024)));
      graphs.push_back(erdos_renyi(n, p, gseed));
      for (ScorerKind kind : kBenchScorers)
        cells.push_back({n, k, kind, &graphs.back()});
    }

  for (int sweep = 0; sweep < std::max(cfg.repeats, 1); ++sweep) {
    for (Cell& c : cells) {
      const auto t0 = clock::now();
      const Scorer scorer = Scorer::build(c.kind, *c.g, cfg.threads);
      const auto scored = score_candidates(*c.g, scorer, cfg.threads);
      const auto t1 = clock::now();
      sink += scored.empty() ? 0.0 : scored.front().score;
      c.best = std::min(
          c.best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
  }
  for (const Cell& c : cells) rep.cells.push_back({c.n, c.k, c.kind, c.best});
  volatile double sink_out = sink;  // defeat dead-code elimination
  (void)sink_out;

  // Per (n, scorer): least-squares slope of log t vs log <k>.
  for (auto n : cfg.sizes) {
    for (ScorerKind kind : kBenchScorers) {
      std::vector<double> xs, ys;
      for (const auto& c : rep.cells)
        if (c.n == n && c.kind == kind && c.ms > 0) {
          xs.push_back(std::log(c.avg_degree));
          ys.push_back(std::log(c.ms));
        }
      if (xs.size() < 2) continue;
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
      }
      mx /= double(xs.size());
      my /= double(xs.size());
      double sxy = 0, sxx = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
      }
      rep.fits.push_back({n, kind, sxy / sxx});
    }
  }
  return rep;
}

nlohmann::json complexity_to_json(const ComplexityReport& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"n", c.n},
                     {"avg_degree", c.avg_degree},
                     {"predictor", std::string(scorer_name(c.kind))},
                     {"ms", c.ms}});
  nlohmann::json fits = nlohmann::json::array();
  for (const auto& f : r.fits)
    fits.push_back({{"n", f.n},
                    {"predictor", std::string(scorer_name(f.kind))},
                    {"exponent", f.exponent}});
  return {{"cells", cells}, {"fits", fits}};
}

std::string complexity_table(const ComplexityReport& r) {
  std::ostringstream out;
  out << "n\t<k>\tpredictor\tms\n";
  for (const auto& c : r.cells)
    out << c.n << '\t' << c.avg_degree << '\t' << scorer_name(c.kind) << '\t'
        << c.ms << '\n';
  out << "\nfitted <k>-exponent of wall time\n";
  for (const auto& f : r.fits)
    out << "n=" << f.n << '\t' << scorer_name(f.kind) << '\t' << f.exponent
        << '\n';
  return out.str();
}

}  // namespace linkpred
