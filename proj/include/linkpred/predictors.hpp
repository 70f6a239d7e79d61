#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "linkpred/graph.hpp"

namespace linkpred {

/// The seven link predictors.
enum class ScorerKind { cn, ra, lnb_cn, lnb_ra, car, cra, mi };

inline constexpr std::array<ScorerKind, 7> kAllScorers = {
    ScorerKind::cn,  ScorerKind::ra,  ScorerKind::lnb_cn, ScorerKind::lnb_ra,
    ScorerKind::car, ScorerKind::cra, ScorerKind::mi};

/// Stable names used by the CLI and reports: "cn", "ra", "lnb-cn", "lnb-ra",
/// "car", "cra", "mi".
std::string_view scorer_name(ScorerKind k);
std::optional<ScorerKind> parse_scorer(std::string_view name);

/// Probability that two nodes of degrees k_m and k_n share a link when only
/// degrees are known, out of m_edges total links:
///   1 - C(M-k_m, k_n)/C(M, k_n)
/// evaluated in log space as 1 - prod_{i=0}^{k_n-1} (M-k_m-i)/(M-i).
/// Symmetric in (k_m, k_n); exactly 0 when either degree is 0 and exactly 1
/// when k_m + k_n > M. Throws std::domain_error for negative degrees or
/// m_edges < 1.
double p_connect(std::int64_t k_m, std::int64_t k_n, std::int64_t m_edges);

/// -log2 p_connect(degree(m), degree(n), M) in bits; +infinity when the
/// connection probability is 0 (an endpoint of degree 0).
double pair_self_information(const Graph& g, NodeId m, NodeId n);

/// Information that "z is a common neighbor" carries about "the pair is
/// linked": the mean pair self-information over z's neighbor pairs minus
/// -log2 of z's local clustering. Zero when z has no connected neighbor
/// pair or degree < 2.
double node_link_mutual_information(const Graph& g, NodeId z);

/// Per-graph state for the local naive Bayes scorers.
struct LnbPrecompute {
  double eta = 0;          // N(N-1)/(2M) - 1
  std::vector<double> r;   // r[z] = (connected_z + 1)/(disconnected_z + 1)
};

/// Throws std::domain_error unless the graph has >= 2 nodes and >= 1 edge.
LnbPrecompute lnb_precompute(const Graph& g, int threads = 0);

double score_cn(const Graph& g, NodeId x, NodeId y);
double score_ra(const Graph& g, NodeId x, NodeId y);
double score_lnb_cn(const Graph& g, const LnbPrecompute& pre, NodeId x, NodeId y);
double score_lnb_ra(const Graph& g, const LnbPrecompute& pre, NodeId x, NodeId y);
double score_car(const Graph& g, NodeId x, NodeId y);
double score_cra(const Graph& g, NodeId x, NodeId y);

/// Per-graph state for the mutual-information scorer.
struct MiPrecompute {
  std::vector<double> node_mi;  // node_link_mutual_information per node, bits
  std::vector<double> log_ff;   // log_ff[t] = log2(M (M-1) ... (M-t+1)), t <= M
  std::uint64_t train_m = 0;

  /// O(1) pair self-information from the cached log falling factorials;
  /// agrees with the standalone product evaluation to ~1e-12.
  double pair_self_information(std::size_t k_m, std::size_t k_n) const;
};

/// Fills node_mi for every node and the factor cache. Throws
/// std::domain_error on an edgeless graph.
MiPrecompute mi_precompute(const Graph& g, int threads = 0);

/// Sum of node_mi over the common neighbors minus the pair self-information.
/// Defined (and generally nonzero) for pairs without common neighbors; pairs
/// with infinite self-information get -infinity so they rank last.
double score_mi(const Graph& g, const MiPrecompute& pre, NodeId x, NodeId y);

/// One predictor bound to one (training) graph, with its precomputed state.
/// Immutable after build; operator() is safe to call concurrently.
class Scorer {
 public:
  static Scorer build(ScorerKind kind, const Graph& g, int threads = 0);

  ScorerKind kind() const { return kind_; }
  const Graph& graph() const { return *g_; }
  double operator()(NodeId x, NodeId y) const;

 private:
  ScorerKind kind_ = ScorerKind::cn;
  const Graph* g_ = nullptr;
  std::optional<LnbPrecompute> lnb_;
  std::optional<MiPrecompute> mi_;
};

}  // namespace linkpred
