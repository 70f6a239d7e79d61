#include "linkpred/random_graph.hpp"

#include "linkpred/rng.hpp"

namespace linkpred {

Graph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<NodePair> edges;
  std::uint64_t idx = 0;
  for (NodeId x = 0; x < n; ++x)
    for (NodeId y = x + 1; y < n; ++y, ++idx)
      if (rng::to_unit(rng::stream_at(seed, idx)) < p) edges.push_back({x, y});
  return Graph::build(std::move(labels), std::move(edges));
}

}  // namespace linkpred
