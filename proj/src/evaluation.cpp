#include "linkpred/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "linkpred/rng.hpp"
#include "linkpred/threads.hpp"

namespace linkpred {

namespace {

bool rank_order(const ScoredPair& a, const ScoredPair& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.pair < b.pair;
}

}  // namespace

std::vector<ScoredPair> score_candidates(const Graph& train, const Scorer& scorer,
                                         int threads) {
  const std::size_t n = train.node_count();
  // Fixed slot per candidate: rows fill independently, so the layout does
  // not depend on the worker count.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) {
    auto nb = train.neighbors(NodeId(x));
    const std::size_t above =
        nb.end() - std::upper_bound(nb.begin(), nb.end(), NodeId(x));
    offset[x + 1] = offset[x] + (n - 1 - x) - above;
  }
  std::vector<ScoredPair> out(offset[n]);

  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
  for (std::int64_t xi = 0; xi < std::int64_t(n); ++xi) {
    const NodeId x = NodeId(xi);
    auto nb = train.neighbors(x);
    auto skip = std::upper_bound(nb.begin(), nb.end(), x);
    std::size_t w = offset[x];
    for (NodeId y = x + 1; y < n; ++y) {
      if (skip != nb.end() && *skip == y) {
        ++skip;
        continue;
      }
      out[w++] = {{x, y}, scorer(x, y)};
    }
  }
  return out;
}

RankedCandidates rank_candidates(const Graph& train, const Scorer& scorer,
                                 std::span<const NodePair> restrict,
                                 int threads) {
  RankedCandidates r;
  if (restrict.empty()) {
    r.entries = score_candidates(train, scorer, threads);
  } else {
    r.entries.resize(restrict.size());
    const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t i = 0; i < std::int64_t(restrict.size()); ++i) {
      const NodePair p = make_node_pair(restrict[i].a, restrict[i].b);
      r.entries[i] = {p, scorer(p.a, p.b)};
    }
  }
  std::sort(r.entries.begin(), r.entries.end(), rank_order);
  return r;
}

double auc_exact(std::span<const double> probe_scores,
                 std::span<const double> nonexistent_scores) {
  if (probe_scores.empty() || nonexistent_scores.empty())
    throw std::domain_error("auc_exact: empty score list");

  struct Item {
    double score;
    bool probe;
  };
  std::vector<Item> items;
  items.reserve(probe_scores.size() + nonexistent_scores.size());
  for (double s : probe_scores) items.push_back({s, true});
  for (double s : nonexistent_scores) items.push_back({s, false});
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.score < b.score; });

  // Walk tie groups in ascending score order; every probe/nonexistent
  // comparison contributes 1, 0 or 0.5 exactly (integer tallies).
  std::uint64_t wins2 = 0;  // 2*n' + n''
  std::uint64_t nonexistent_below = 0;
  std::size_t i = 0;
  while (i < items.size()) {
    std::size_t j = i;
    std::uint64_t p = 0, q = 0;
    while (j < items.size() && items[j].score == items[i].score) {
      items[j].probe ? ++p : ++q;
      ++j;
    }
    wins2 += 2 * p * nonexistent_below + p * q;
    nonexistent_below += q;
    i = j;
  }
  const long double total =
      2.0L * (long double)(probe_scores.size()) * nonexistent_scores.size();
  return double((long double)(wins2) / total);
}

double auc_sampled(std::span<const double> probe_scores,
                   std::span<const double> nonexistent_scores, std::uint64_t n,
                   std::uint64_t seed, int threads) {
  if (probe_scores.empty() || nonexistent_scores.empty())
    throw std::domain_error("auc_sampled: empty score list");
  if (n < 1) throw std::domain_error("auc_sampled: need n >= 1");

  const std::uint64_t a = probe_scores.size();
  const std::uint64_t b = nonexistent_scores.size();
  std::uint64_t wins = 0, ties = 0;
  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(static) reduction(+ : wins, ties) num_threads(nt)
  for (std::int64_t i = 0; i < std::int64_t(n); ++i) {
    const double ps =
        probe_scores[rng::map_to_range(rng::stream_at(seed, 2 * i), a)];
    const double qs =
        nonexistent_scores[rng::map_to_range(rng::stream_at(seed, 2 * i + 1), b)];
    if (ps > qs)
      ++wins;
    else if (ps == qs)
      ++ties;
  }
  return (double(wins) + 0.5 * double(ties)) / double(n);
}

PairKeySet make_pair_key_set(std::span<const NodePair> pairs) {
  PairKeySet s;
  s.reserve(pairs.size());
  for (auto p : pairs) s.insert(pair_key(make_node_pair(p.a, p.b)));
  return s;
}

double precision_at(const RankedCandidates& ranked, std::size_t l,
                    const PairKeySet& probe) {
  if (l < 1 || l > ranked.entries.size())
    throw std::domain_error("precision_at: l out of range");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < l; ++i)
    if (probe.contains(pair_key(ranked.entries[i].pair))) ++hits;
  return double(hits) / double(l);
}

}  // namespace linkpred
