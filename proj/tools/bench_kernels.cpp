// Serial vs. OpenMP comparison for the hot kernels: neighbor-pair counting,
// MI precompute, candidate scoring and the BFS statistics pass. The serial
// column runs the same kernels pinned to one thread; outputs must match
// bit-for-bit (verified here) since all reductions are order-fixed.
//
// Usage: bench_kernels [n] [avg_degree] [seed]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "linkpred/evaluation.hpp"
#include "linkpred/random_graph.hpp"
#include "linkpred/stats.hpp"
#include "linkpred/threads.hpp"

using namespace linkpred;

namespace {

double time_ms(const auto& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f %12.2f %9.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint32_t n = argc > 1 ? std::atoi(argv[1]) : 3000;
  const double k = argc > 2 ? std::atof(argv[2]) : 8.0;
  const std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;
  const int hw = resolve_threads(0);

  const Graph g = erdos_renyi(n, k / double(n - 1), seed);
  std::printf("graph: n=%zu m=%zu  threads: 1 vs %d\n", g.node_count(),
              g.edge_count(), hw);
  std::printf("%-28s %10s %12s %9s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  {
    std::vector<NeighborPairCounts> a, b;
    const double ts = time_ms([&] { a = neighbor_pair_counts(g, 1); });
    const double tp = time_ms([&] { b = neighbor_pair_counts(g, hw); });
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].connected != b[i].connected ||
          a[i].disconnected != b[i].disconnected) {
        std::fprintf(stderr, "neighbor_pair_counts mismatch at %zu\n", i);
        return 1;
      }
    row("neighbor_pair_counts", ts, tp);
  }
  {
    MiPrecompute a, b;
    const double ts = time_ms([&] { a = mi_precompute(g, 1); });
    const double tp = time_ms([&] { b = mi_precompute(g, hw); });
    if (a.node_mi != b.node_mi) {
      std::fprintf(stderr, "mi_precompute mismatch\n");
      return 1;
    }
    row("mi_precompute", ts, tp);
  }
  for (ScorerKind kind : {ScorerKind::cn, ScorerKind::mi, ScorerKind::car}) {
    const Scorer scorer = Scorer::build(kind, g, hw);
    std::vector<ScoredPair> a, b;
    const double ts = time_ms([&] { a = score_candidates(g, scorer, 1); });
    const double tp = time_ms([&] { b = score_candidates(g, scorer, hw); });
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].pair != b[i].pair || a[i].score != b[i].score) {
        std::fprintf(stderr, "score_candidates(%s) mismatch at %zu\n",
                     std::string(scorer_name(kind)).c_str(), i);
        return 1;
      }
    row(("score_candidates " + std::string(scorer_name(kind))).c_str(), ts, tp);
  }
  {
    NetworkStats a, b;
    const double ts = time_ms([&] { a = network_stats(g, 1); });
    const double tp = time_ms([&] { b = network_stats(g, hw); });
    if (a.efficiency != b.efficiency || a.avg_distance != b.avg_distance) {
      std::fprintf(stderr, "network_stats mismatch\n");
      return 1;
    }
    row("network_stats", ts, tp);
  }
  return 0;
}
