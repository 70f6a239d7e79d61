#include "linkpred/stats.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "linkpred/threads.hpp"

namespace linkpred {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

NetworkStats network_stats(const Graph& g, int threads) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  if (n < 2) throw std::domain_error("network_stats: need at least 2 nodes");

  NetworkStats s;
  s.n = n;
  s.m = m;
  s.avg_degree = 2.0 * double(m) / double(n);

  std::uint64_t sum_k2 = 0;
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t k = g.degree(v);
    sum_k2 += k * k;
  }
  s.heterogeneity =
      m == 0 ? kNaN : (double(sum_k2) / double(n)) / (s.avg_degree * s.avg_degree);

  // Mean local clustering; nodes with degree < 2 contribute 0.
  auto counts = neighbor_pair_counts(g, threads);
  double csum = 0;
  for (NodeId v = 0; v < n; ++v) {
    const auto pairs = counts[v].connected + counts[v].disconnected;
    if (pairs > 0) csum += double(counts[v].connected) / double(pairs);
  }
  s.clustering = csum / double(n);

  // Pearson degree-degree correlation over edge endpoints.
  if (m == 0) {
    s.assortativity = kNaN;
  } else {
    std::uint64_t s_prod = 0, s_sum = 0, s_sq = 0;
    for (auto e : g.edges()) {
      const std::uint64_t j = g.degree(e.a), k = g.degree(e.b);
      s_prod += j * k;
      s_sum += j + k;
      s_sq += j * j + k * k;
    }
    const long double mean_half = (long double)(s_sum) / (2.0L * m);
    const long double num = (long double)(s_prod) / m - mean_half * mean_half;
    const long double den = (long double)(s_sq) / (2.0L * m) - mean_half * mean_half;
    s.assortativity = den == 0 ? kNaN : double(num / den);
  }

  // Streaming per-source BFS: per-source partials reduced in id order keep
  // the result independent of the worker count.
  std::vector<double> inv_sum(n, 0.0);
  std::vector<std::uint64_t> dist_sum(n, 0), reach_cnt(n, 0);
  const int nt = resolve_threads(threads);
#pragma omp parallel num_threads(nt)
  {
    std::vector<std::int32_t> dist(n);
    std::vector<NodeId> queue(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t src = 0; src < std::int64_t(n); ++src) {
      std::fill(dist.begin(), dist.end(), -1);
      dist[src] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = NodeId(src);
      double inv = 0;
      std::uint64_t dsum = 0, cnt = 0;
      while (head < tail) {
        NodeId u = queue[head++];
        const std::int32_t du = dist[u];
        if (du > 0) {
          inv += 1.0 / du;
          dsum += std::uint64_t(du);
          ++cnt;
        }
        for (NodeId v : g.neighbors(u))
          if (dist[v] < 0) {
            dist[v] = du + 1;
            queue[tail++] = v;
          }
      }
      inv_sum[src] = inv;
      dist_sum[src] = dsum;
      reach_cnt[src] = cnt;
    }
  }
  double inv_total = 0;
  std::uint64_t d_total = 0, c_total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    inv_total += inv_sum[i];
    d_total += dist_sum[i];
    c_total += reach_cnt[i];
  }
  s.efficiency = inv_total / (double(n) * double(n - 1));
  s.avg_distance = c_total == 0 ? kNaN : double(d_total) / double(c_total);
  return s;
}

nlohmann::json stats_to_json(const NetworkStats& s) {
  auto num = [](double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  return {
      {"n", s.n},
      {"m", s.m},
      {"efficiency", num(s.efficiency)},
      {"clustering", num(s.clustering)},
      {"assortativity", num(s.assortativity)},
      {"heterogeneity", num(s.heterogeneity)},
      {"avg_degree", num(s.avg_degree)},
      {"avg_distance", num(s.avg_distance)},
  };
}

}  // namespace linkpred
