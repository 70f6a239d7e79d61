#pragma once

#include <cstdint>
#include <json.hpp>

#include "linkpred/graph.hpp"

namespace linkpred {

/// Raised when a requested partition cannot be evaluated (empty probe set).
class SplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partition of a graph's edge set into training and probe edges. The
/// training graph keeps the full node set, so nodes may end up isolated.
struct SplitResult {
  Graph train;
  std::vector<NodePair> probe;  // ascending (a, b)
  std::uint64_t seed = 0;
  double probe_fraction = 0;
};

/// Draws round-half-up(probe_fraction * M) probe edges uniformly without
/// replacement. The generator is pinned so any implementation can reproduce
/// a partition from (graph, fraction, seed): std::mt19937_64 seeded with
/// `seed` drives a partial Fisher-Yates over the canonical (ascending) edge
/// order, with unbiased bounds from rng::bounded. Throws std::domain_error
/// for fraction outside (0, 1) or an edgeless graph, SplitError when the
/// probe count rounds to zero.
SplitResult split(const Graph& g, double probe_fraction, std::uint64_t seed);

/// The 8-node, 10-edge example graph (labels v1..v8) exercised throughout
/// the tests: edges v1v2 v1v3 v1v4 v2v4 v2v5 v5v6 v5v7 v6v7 v6v8 v7v8.
Graph canonical_fixture();

/// {seed, probe_fraction, train_edges: [[label,label]...], probe_edges: [...]}
nlohmann::json split_to_json(const SplitResult& s);

}  // namespace linkpred
