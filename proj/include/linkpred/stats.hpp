#pragma once

#include <json.hpp>

#include "linkpred/graph.hpp"

namespace linkpred {

/// Topology summary of one graph.
struct NetworkStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double efficiency = 0;     // mean inverse shortest-path length, 1/inf = 0
  double clustering = 0;     // mean local clustering, degree<2 nodes count 0
  double assortativity = 0;  // Pearson degree-degree correlation over edge ends
  double heterogeneity = 0;  // <k^2>/<k>^2
  double avg_degree = 0;     // 2M/N
  double avg_distance = 0;   // mean finite off-diagonal hop count
};

/// Computes the summary with streaming per-source BFS accumulation (no N^2
/// distance table). Unreachable pairs contribute 0 to efficiency and are
/// excluded from avg_distance. assortativity is NaN when the degree variance
/// over edge ends is zero; avg_distance and heterogeneity are NaN on graphs
/// without edges. Throws std::domain_error when n < 2.
NetworkStats network_stats(const Graph& g, int threads = 0);

/// Flat object with keys n, m, efficiency, clustering, assortativity,
/// heterogeneity, avg_degree, avg_distance (non-finite values become null).
nlohmann::json stats_to_json(const NetworkStats& s);

}  // namespace linkpred
