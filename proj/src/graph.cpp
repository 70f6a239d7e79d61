#include "linkpred/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "linkpred/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linkpred {

Graph Graph::build(std::vector<std::string> labels, std::vector<NodePair> edges) {
  Graph g;
  g.labels_ = std::move(labels);
  const auto n = g.labels_.size();

  for (auto& e : edges) e = make_node_pair(e.a, e.b);
  std::erase_if(edges, [](NodePair e) { return e.a == e.b; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto e : edges)
    if (e.b >= n) throw std::domain_error("graph: edge endpoint out of range");
  g.edges_ = std::move(edges);

  g.offsets_.assign(n + 1, 0);
  for (auto e : g.edges_) {
    ++g.offsets_[e.a + 1];
    ++g.offsets_[e.b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto e : g.edges_) {
    g.adj_[fill[e.a]++] = e.b;
    g.adj_[fill[e.b]++] = e.a;
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);

  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.labels_[i], NodeId(i));
  return g;
}

bool Graph::has_edge(NodeId x, NodeId y) const {
  if (degree(x) > degree(y)) std::swap(x, y);
  auto nb = neighbors(x);
  return std::binary_search(nb.begin(), nb.end(), y);
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<NodePair> edges;

  auto intern = [&](std::string&& tok) {
    auto [it, inserted] = ids.emplace(std::move(tok), NodeId(labels.size()));
    if (inserted) labels.push_back(it->first);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;  // blank
    if (a[0] == '#' || a[0] == '%') continue;
    if (!(ls >> b)) throw ParseError(line_no, "expected two node labels");
    // Tokens past the second are ignored.
    NodeId ia = intern(std::move(a));
    NodeId ib = intern(std::move(b));
    edges.push_back(make_node_pair(ia, ib));
  }
  return Graph::build(std::move(labels), std::move(edges));
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return load_edge_list(in);
}

Graph giant_component(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return g;

  std::vector<std::uint32_t> comp(n, UINT32_MAX);
  std::uint32_t ncomp = 0;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (comp[s] != UINT32_MAX) continue;
    comp[s] = ncomp;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (NodeId v : g.neighbors(queue[h]))
        if (comp[v] == UINT32_MAX) {
          comp[v] = ncomp;
          queue.push_back(v);
        }
    ++ncomp;
  }

  std::vector<std::size_t> size(ncomp, 0);
  std::vector<const std::string*> min_label(ncomp, nullptr);
  for (NodeId v = 0; v < n; ++v) {
    ++size[comp[v]];
    const std::string& l = g.label(v);
    if (!min_label[comp[v]] || l < *min_label[comp[v]]) min_label[comp[v]] = &l;
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < ncomp; ++c) {
    if (size[c] > size[best] ||
        (size[c] == size[best] && *min_label[c] < *min_label[best]))
      best = c;
  }

  std::vector<NodeId> remap(n, UINT32_MAX);
  std::vector<std::string> labels;
  labels.reserve(size[best]);
  for (NodeId v = 0; v < n; ++v)
    if (comp[v] == best) {
      remap[v] = NodeId(labels.size());
      labels.push_back(g.label(v));
    }
  std::vector<NodePair> edges;
  edges.reserve(g.edge_count());
  for (auto e : g.edges())
    if (comp[e.a] == best) edges.push_back({remap[e.a], remap[e.b]});
  return Graph::build(std::move(labels), std::move(edges));
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId x, NodeId y) {
  if (!g.valid(x) || !g.valid(y) || x == y)
    throw std::domain_error("common_neighbors: invalid node pair");
  auto nx = g.neighbors(x);
  auto ny = g.neighbors(y);
  std::vector<NodeId> out;
  std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                        std::back_inserter(out));
  return out;
}

DistanceMatrix all_pairs_distances(const Graph& g, int threads) {
  const std::size_t n = g.node_count();
  DistanceMatrix m;
  m.n = n;
  m.d.assign(n * n, DistanceMatrix::kUnreachable);
  if (n == 0) return m;

  const int nt = resolve_threads(threads);
#pragma omp parallel num_threads(nt)
  {
    std::vector<NodeId> queue(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < std::int64_t(n); ++s) {
      auto* row = m.d.data() + std::size_t(s) * n;
      row[s] = 0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = NodeId(s);
      while (head < tail) {
        NodeId u = queue[head++];
        const std::int32_t du = row[u];
        for (NodeId v : g.neighbors(u))
          if (row[v] == DistanceMatrix::kUnreachable) {
            row[v] = du + 1;
            queue[tail++] = v;
          }
      }
    }
  }
  return m;
}

std::vector<NeighborPairCounts> neighbor_pair_counts(const Graph& g, int threads) {
  const std::size_t n = g.node_count();
  std::vector<NeighborPairCounts> out(n);
  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
  for (std::int64_t z = 0; z < std::int64_t(n); ++z) {
    auto nb = g.neighbors(NodeId(z));
    NeighborPairCounts c;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j]))
          ++c.connected;
        else
          ++c.disconnected;
      }
    out[z] = c;
  }
  return out;
}

}  // namespace linkpred
