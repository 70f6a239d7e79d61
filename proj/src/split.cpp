#include "linkpred/split.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "linkpred/rng.hpp"

namespace linkpred {

SplitResult split(const Graph& g, double probe_fraction, std::uint64_t seed) {
  if (!(probe_fraction > 0.0 && probe_fraction < 1.0))
    throw std::domain_error("split: probe_fraction must lie in (0, 1)");
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::domain_error("split: graph has no edges");

  // Round half up.
  const auto probe_count =
      std::size_t(std::floor(probe_fraction * double(m) + 0.5));
  if (probe_count == 0)
    throw SplitError("split: probe set rounds to zero edges");

  std::vector<NodePair> pool(g.edges().begin(), g.edges().end());
  std::mt19937_64 eng(seed);
  auto next = [&eng] { return eng(); };
  for (std::size_t i = 0; i < probe_count; ++i) {
    const std::size_t j = i + std::size_t(rng::bounded(next, m - i));
    std::swap(pool[i], pool[j]);
  }

  SplitResult r;
  r.seed = seed;
  r.probe_fraction = probe_fraction;
  r.probe.assign(pool.begin(), pool.begin() + probe_count);
  std::sort(r.probe.begin(), r.probe.end());
  std::vector<NodePair> train_edges(pool.begin() + probe_count, pool.end());
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  r.train = Graph::build(std::move(labels), std::move(train_edges));
  return r;
}

Graph canonical_fixture() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<NodePair> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4},
                                 {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
  return Graph::build(std::move(labels), std::move(edges));
}

nlohmann::json split_to_json(const SplitResult& s) {
  auto edge_array = [&](std::span<const NodePair> edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto e : edges)
      arr.push_back({s.train.label(e.a), s.train.label(e.b)});
    return arr;
  };
  return {
      {"seed", s.seed},
      {"probe_fraction", s.probe_fraction},
      {"train_edges", edge_array(s.train.edges())},
      {"probe_edges", edge_array(s.probe)},
  };
}

}  // namespace linkpred
