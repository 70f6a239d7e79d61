#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace linkpred {

using NodeId = std::uint32_t;

/// Unordered node pair, stored with a < b.
struct NodePair {
  NodeId a = 0;
  NodeId b = 0;
  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

inline NodePair make_node_pair(NodeId x, NodeId y) {
  return x < y ? NodePair{x, y} : NodePair{y, x};
}

/// Packs a canonical pair into one 64-bit key (ids are 32-bit).
inline std::uint64_t pair_key(NodePair p) {
  return (std::uint64_t(p.a) << 32) | p.b;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable undirected simple graph over dense node ids.
///
/// Invariants: no self-loops, no duplicate edges, adjacency sorted and
/// symmetric, degree(x) == |neighbors(x)|. Safe to share across threads
/// once constructed.
class Graph {
 public:
  Graph() = default;

  /// Canonicalizes the edge list (drops self-loops and duplicates) and
  /// builds the adjacency structure. Edge endpoints must index `labels`.
  static Graph build(std::vector<std::string> labels, std::vector<NodePair> edges);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId x) const {
    return {adj_.data() + offsets_[x], adj_.data() + offsets_[x + 1]};
  }
  std::size_t degree(NodeId x) const { return offsets_[x + 1] - offsets_[x]; }
  bool has_edge(NodeId x, NodeId y) const;
  bool valid(NodeId x) const { return x < labels_.size(); }

  /// Edges in canonical order: ascending (a, b).
  std::span<const NodePair> edges() const { return edges_; }

  const std::string& label(NodeId x) const { return labels_[x]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find_label(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<NodePair> edges_;
  std::vector<std::size_t> offsets_;  // size node_count()+1
  std::vector<NodeId> adj_;
  std::unordered_map<std::string, NodeId> index_;
};

/// Parses one edge per line: two whitespace-separated node labels, extra
/// tokens ignored. Lines whose first non-blank character is '#' or '%' and
/// blank lines are skipped. Labels get dense ids in first-appearance order;
/// self-loops and duplicate edges are dropped silently. A line with a single
/// token raises ParseError carrying the 1-based line number. Empty input
/// yields an empty graph.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::filesystem::path& path);

/// Induced subgraph on the largest connected component, relabeled to dense
/// ids (relative order of surviving ids preserved, original labels kept).
/// Size ties pick the component containing the lexicographically smallest
/// label. An empty graph passes through unchanged.
Graph giant_component(const Graph& g);

/// Sorted intersection of the two neighborhoods. Works whether or not
/// (x, y) is an edge. Throws std::domain_error for invalid ids or x == y.
std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y);

struct DistanceMatrix {
  static constexpr std::int32_t kUnreachable = -1;
  std::size_t n = 0;
  std::vector<std::int32_t> d;
  std::int32_t operator()(NodeId x, NodeId y) const {
    return d[std::size_t(x) * n + y];
  }
};

/// Hop counts from a BFS per source node. Parallel over sources; the result
/// is independent of the worker count.
DistanceMatrix all_pairs_distances(const Graph& g, int threads = 0);

/// Per-node counts of connected vs. disconnected neighbor pairs
/// (connected + disconnected == C(degree, 2)).
struct NeighborPairCounts {
  std::uint64_t connected = 0;
  std::uint64_t disconnected = 0;
};
std::vector<NeighborPairCounts> neighbor_pair_counts(const Graph& g, int threads = 0);

}  // namespace linkpred
