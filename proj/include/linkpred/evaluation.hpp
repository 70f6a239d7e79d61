#pragma once

#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "linkpred/graph.hpp"
#include "linkpred/predictors.hpp"

namespace linkpred {

struct ScoredPair {
  NodePair pair;
  double score = 0;
};

/// Candidates in descending score order, ties broken by ascending
/// (min-id, max-id).
struct RankedCandidates {
  std::vector<ScoredPair> entries;
};

/// Scores every pair absent from the training edge set, in ascending (a, b)
/// order. Parallel over rows; output is identical for any worker count.
std::vector<ScoredPair> score_candidates(const Graph& train, const Scorer& scorer,
                                         int threads = 0);

/// Ranks all candidates (or only `restrict`, when given) of the graph the
/// scorer was built on.
RankedCandidates rank_candidates(const Graph& train, const Scorer& scorer,
                                 std::span<const NodePair> restrict = {},
                                 int threads = 0);

/// (n' + 0.5 n'')/n over all |probe| x |nonexistent| comparisons, via midrank
/// statistics (ties contribute exactly 0.5). Throws std::domain_error when
/// either list is empty.
double auc_exact(std::span<const double> probe_scores,
                 std::span<const double> nonexistent_scores);

/// Estimator over n seeded comparisons; draws come from a counter-based
/// stream partitioned by comparison index, so the value does not depend on
/// the worker count.
double auc_sampled(std::span<const double> probe_scores,
                   std::span<const double> nonexistent_scores, std::uint64_t n,
                   std::uint64_t seed, int threads = 0);

using PairKeySet = std::unordered_set<std::uint64_t>;
PairKeySet make_pair_key_set(std::span<const NodePair> pairs);

/// Fraction of the top-l entries that are probe pairs. Requires
/// 1 <= l <= |ranked|.
double precision_at(const RankedCandidates& ranked, std::size_t l,
                    const PairKeySet& probe);

}  // namespace linkpred
