#include "linkpred/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "linkpred/threads.hpp"

namespace linkpred {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2 = 0.6931471805599453;

void check_pair(const Graph& g, NodeId x, NodeId y) {
  if (!g.valid(x) || !g.valid(y) || x == y)
    throw std::domain_error("scorer: invalid node pair");
}

/// Merge walk over two sorted neighbor lists; f(z) per common neighbor,
/// ascending z.
template <class F>
void for_common(std::span<const NodeId> a, std::span<const NodeId> b, F&& f) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      f(*i);
      ++i;
      ++j;
    }
  }
}

std::size_t count_common_sorted(std::span<const NodeId> a,
                                std::span<const NodeId> b) {
  std::size_t c = 0;
  for_common(a, b, [&](NodeId) { ++c; });
  return c;
}

}  // namespace

std::string_view scorer_name(ScorerKind k) {
  switch (k) {
    case ScorerKind::cn: return "cn";
    case ScorerKind::ra: return "ra";
    case ScorerKind::lnb_cn: return "lnb-cn";
    case ScorerKind::lnb_ra: return "lnb-ra";
    case ScorerKind::car: return "car";
    case ScorerKind::cra: return "cra";
    case ScorerKind::mi: return "mi";
  }
  return "?";
}

std::optional<ScorerKind> parse_scorer(std::string_view name) {
  for (ScorerKind k : kAllScorers)
    if (scorer_name(k) == name) return k;
  return std::nullopt;
}

double p_connect(std::int64_t k_m, std::int64_t k_n, std::int64_t m_edges) {
  if (k_m < 0 || k_n < 0 || m_edges < 1)
    throw std::domain_error("p_connect: degrees must be >= 0 and m_edges >= 1");
  if (k_m == 0 || k_n == 0) return 0.0;
  if (k_m + k_n > m_edges) return 1.0;
  // Iterate over the smaller degree; also makes the evaluation exactly
  // symmetric in (k_m, k_n).
  const std::int64_t kn = std::min(k_m, k_n);
  const std::int64_t km = std::max(k_m, k_n);
  double ln_p0 = 0;  // ln prod_{i<kn} (M-km-i)/(M-i)
  for (std::int64_t i = 0; i < kn; ++i)
    ln_p0 += std::log(double(m_edges - km - i)) - std::log(double(m_edges - i));
  return std::clamp(-std::expm1(ln_p0), 0.0, 1.0);
}

double pair_self_information(const Graph& g, NodeId m, NodeId n) {
  check_pair(g, m, n);
  const double p = p_connect(std::int64_t(g.degree(m)), std::int64_t(g.degree(n)),
                             std::int64_t(g.edge_count()));
  if (p == 0.0) return kInf;
  return -std::log2(p);
}

double node_link_mutual_information(const Graph& g, NodeId z) {
  if (!g.valid(z)) throw std::domain_error("node_link_mutual_information: invalid id");
  auto nb = g.neighbors(z);
  const std::size_t k = nb.size();
  if (k < 2) return 0.0;
  std::uint64_t connected = 0;
  double sum = 0;
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.has_edge(nb[i], nb[j])) ++connected;
      sum += pair_self_information(g, nb[i], nb[j]);
      ++pairs;
    }
  if (connected == 0) return 0.0;
  // mean pair self-information minus -log2 of z's local clustering
  return sum / double(pairs) + std::log2(double(connected) / double(pairs));
}

LnbPrecompute lnb_precompute(const Graph& g, int threads) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  if (n < 2 || m == 0)
    throw std::domain_error("lnb_precompute: need >= 2 nodes and >= 1 edge");
  LnbPrecompute pre;
  pre.eta = double(n) * double(n - 1) / (2.0 * double(m)) - 1.0;
  auto counts = neighbor_pair_counts(g, threads);
  pre.r.resize(n);
  for (std::size_t z = 0; z < n; ++z)
    pre.r[z] = double(counts[z].connected + 1) / double(counts[z].disconnected + 1);
  return pre;
}

double score_cn(const Graph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  return double(count_common_sorted(g.neighbors(x), g.neighbors(y)));
}

double score_ra(const Graph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  double s = 0;
  for_common(g.neighbors(x), g.neighbors(y),
             [&](NodeId z) { s += 1.0 / double(g.degree(z)); });
  return s;
}

double score_lnb_cn(const Graph& g, const LnbPrecompute& pre, NodeId x, NodeId y) {
  check_pair(g, x, y);
  const double log_eta = std::log2(pre.eta);
  double s = 0;
  std::size_t o = 0;
  for_common(g.neighbors(x), g.neighbors(y), [&](NodeId z) {
    s += std::log2(pre.r[z]);
    ++o;
  });
  if (o == 0) return 0.0;
  return double(o) * log_eta + s;
}

double score_lnb_ra(const Graph& g, const LnbPrecompute& pre, NodeId x, NodeId y) {
  check_pair(g, x, y);
  const double log_eta = std::log2(pre.eta);
  double s = 0;
  for_common(g.neighbors(x), g.neighbors(y), [&](NodeId z) {
    s += (log_eta + std::log2(pre.r[z])) / double(g.degree(z));
  });
  return s;
}

namespace {

/// Common neighbors of (x, y) into a reusable per-thread buffer.
std::vector<NodeId>& common_into_scratch(const Graph& g, NodeId x, NodeId y) {
  thread_local std::vector<NodeId> buf;
  buf.clear();
  for_common(g.neighbors(x), g.neighbors(y), [&](NodeId z) { buf.push_back(z); });
  return buf;
}

}  // namespace

double score_car(const Graph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  const auto& o = common_into_scratch(g, x, y);
  if (o.empty()) return 0.0;
  std::uint64_t gamma_total = 0;  // sum over z of |Γ(z) ∩ O|
  for (NodeId z : o)
    gamma_total += count_common_sorted(g.neighbors(z), {o.data(), o.size()});
  return double(o.size()) * double(gamma_total) / 2.0;
}

double score_cra(const Graph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  const auto& o = common_into_scratch(g, x, y);
  double s = 0;
  for (NodeId z : o)
    s += double(count_common_sorted(g.neighbors(z), {o.data(), o.size()})) /
         double(g.degree(z));
  return s;
}

double MiPrecompute::pair_self_information(std::size_t k_m, std::size_t k_n) const {
  if (k_m == 0 || k_n == 0) return kInf;
  if (k_m + k_n > train_m) return 0.0;
  // fixed operand order keeps the value exactly symmetric in (k_m, k_n)
  const auto [lo, hi] = std::minmax(k_m, k_n);
  const double log2_p0 = log_ff[lo + hi] - log_ff[hi] - log_ff[lo];
  const double p1 = std::clamp(-std::expm1(log2_p0 * kLn2), 0.0, 1.0);
  return -std::log2(p1);
}

MiPrecompute mi_precompute(const Graph& g, int threads) {
  const std::size_t m = g.edge_count();
  if (m == 0) throw std::domain_error("mi_precompute: graph has no edges");
  MiPrecompute pre;
  pre.train_m = m;
  pre.log_ff.resize(m + 1);
  pre.log_ff[0] = 0.0;
  long double acc = 0.0L;  // extended precision keeps the prefix sums tight
  for (std::size_t t = 1; t <= m; ++t) {
    acc += std::log2(static_cast<long double>(m - t + 1));
    pre.log_ff[t] = double(acc);
  }

  const std::size_t n = g.node_count();
  pre.node_mi.assign(n, 0.0);
  const int nt = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nt)
  for (std::int64_t z = 0; z < std::int64_t(n); ++z) {
    auto nb = g.neighbors(NodeId(z));
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::uint64_t connected = 0, pairs = 0;
    double sum = 0;  // ascending (i, j): the order is fixed per node
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        if (g.has_edge(nb[i], nb[j])) ++connected;
        sum += pre.pair_self_information(g.degree(nb[i]), g.degree(nb[j]));
        ++pairs;
      }
    if (connected == 0) continue;
    pre.node_mi[z] =
        sum / double(pairs) + std::log2(double(connected) / double(pairs));
  }
  return pre;
}

double score_mi(const Graph& g, const MiPrecompute& pre, NodeId x, NodeId y) {
  check_pair(g, x, y);
  double sum = 0;
  for_common(g.neighbors(x), g.neighbors(y),
             [&](NodeId z) { sum += pre.node_mi[z]; });
  const double ipair = pre.pair_self_information(g.degree(x), g.degree(y));
  if (ipair == kInf) return -kInf;  // rank pairs with isolated endpoints last
  return sum - ipair;
}

Scorer Scorer::build(ScorerKind kind, const Graph& g, int threads) {
  Scorer s;
  s.kind_ = kind;
  s.g_ = &g;
  switch (kind) {
    case ScorerKind::lnb_cn:
    case ScorerKind::lnb_ra:
      s.lnb_ = lnb_precompute(g, threads);
      break;
    case ScorerKind::mi:
      s.mi_ = mi_precompute(g, threads);
      break;
    default:
      break;
  }
  return s;
}

double Scorer::operator()(NodeId x, NodeId y) const {
  switch (kind_) {
    case ScorerKind::cn: return score_cn(*g_, x, y);
    case ScorerKind::ra: return score_ra(*g_, x, y);
    case ScorerKind::lnb_cn: return score_lnb_cn(*g_, *lnb_, x, y);
    case ScorerKind::lnb_ra: return score_lnb_ra(*g_, *lnb_, x, y);
    case ScorerKind::car: return score_car(*g_, x, y);
    case ScorerKind::cra: return score_cra(*g_, x, y);
    case ScorerKind::mi: return score_mi(*g_, *mi_, x, y);
  }
  return 0;
}

}  // namespace linkpred
