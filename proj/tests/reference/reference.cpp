#include "reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace refimpl {

using linkpred::Graph;
using linkpred::NodeId;
using linkpred::ScorerKind;

namespace {

bool adjacent(const Graph& g, NodeId x, NodeId y) {
  for (NodeId v : g.neighbors(x))
    if (v == y) return true;
  return false;
}

std::vector<NodeId> common(const Graph& g, NodeId x, NodeId y) {
  std::vector<NodeId> out;
  for (NodeId u : g.neighbors(x))
    for (NodeId v : g.neighbors(y))
      if (u == v) out.push_back(u);
  return out;
}

bool contains(const std::vector<NodeId>& v, NodeId x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  Rational r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= Rational(n - i, i + 1);
  return r;
}

Rational p_connect(std::int64_t km, std::int64_t kn, std::int64_t m) {
  const Rational c0 = binomial(std::uint64_t(std::max<std::int64_t>(m - km, 0)),
                               std::uint64_t(kn));
  const Rational c1 = binomial(std::uint64_t(m), std::uint64_t(kn));
  return 1 - c0 / c1;
}

double log2r(const Rational& q) {
  const BigFloat v(q);
  return static_cast<double>(log(v) / log(BigFloat(2)));
}

double neg_log2(const Rational& q) { return -log2r(q); }

double pair_self_information(const Graph& g, NodeId m, NodeId n) {
  const Rational p = p_connect(std::int64_t(g.degree(m)),
                               std::int64_t(g.degree(n)),
                               std::int64_t(g.edge_count()));
  if (p == 0) return std::numeric_limits<double>::infinity();
  return neg_log2(p);
}

double node_mutual_information(const Graph& g, NodeId z) {
  auto nb = g.neighbors(z);
  const std::size_t k = nb.size();
  if (k < 2) return 0.0;
  std::uint64_t connected = 0, total = 0;
  double sum = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (adjacent(g, nb[i], nb[j])) ++connected;
      sum += refimpl::pair_self_information(g, nb[i], nb[j]);
      ++total;
    }
  if (connected == 0) return 0.0;
  const double mean = sum / double(total);
  return mean - neg_log2(Rational(connected, total));
}

double score(ScorerKind kind, const Graph& g, NodeId x, NodeId y) {
  const auto o = common(g, x, y);
  switch (kind) {
    case ScorerKind::cn:
      return double(o.size());
    case ScorerKind::ra: {
      Rational s = 0;
      for (NodeId z : o) s += Rational(1, std::uint64_t(g.degree(z)));
      return static_cast<double>(BigFloat(s));
    }
    case ScorerKind::lnb_cn:
    case ScorerKind::lnb_ra: {
      const std::uint64_t n = g.node_count();
      const Rational eta =
          Rational(n * (n - 1), 2 * std::uint64_t(g.edge_count())) - 1;
      double s = 0;
      for (NodeId z : o) {
        std::uint64_t tri = 0, open = 0;
        auto nbz = g.neighbors(z);
        for (std::size_t i = 0; i < nbz.size(); ++i)
          for (std::size_t j = i + 1; j < nbz.size(); ++j)
            adjacent(g, nbz[i], nbz[j]) ? ++tri : ++open;
        const Rational rz(tri + 1, open + 1);
        const double term = log2r(eta) + log2r(rz);
        s += kind == ScorerKind::lnb_cn ? term : term / double(g.degree(z));
      }
      return s;
    }
    case ScorerKind::car: {
      std::uint64_t gamma_sum = 0;
      for (NodeId z : o)
        for (NodeId w : g.neighbors(z))
          if (contains(o, w)) ++gamma_sum;
      return double(o.size()) * double(gamma_sum) / 2.0;
    }
    case ScorerKind::cra: {
      Rational s = 0;
      for (NodeId z : o) {
        std::uint64_t gz = 0;
        for (NodeId w : g.neighbors(z))
          if (contains(o, w)) ++gz;
        s += Rational(gz, std::uint64_t(g.degree(z)));
      }
      return static_cast<double>(BigFloat(s));
    }
    case ScorerKind::mi: {
      const Rational p = p_connect(std::int64_t(g.degree(x)),
                                   std::int64_t(g.degree(y)),
                                   std::int64_t(g.edge_count()));
      if (p == 0) return -std::numeric_limits<double>::infinity();
      double s = 0;
      for (NodeId z : o) s += node_mutual_information(g, z);
      return s - neg_log2(p);
    }
  }
  return 0;
}

double auc_double_loop(std::span<const double> probe,
                       std::span<const double> nonexistent) {
  std::uint64_t wins = 0, ties = 0;
  for (double p : probe)
    for (double q : nonexistent) {
      if (p > q)
        ++wins;
      else if (p == q)
        ++ties;
    }
  const long double n = (long double)(probe.size()) * nonexistent.size();
  return double(((long double)(wins) + 0.5L * ties) / n);
}

linkpred::NetworkStats network_stats(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto e : g.edges()) d[e.a][e.b] = d[e.b][e.a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);

  linkpred::NetworkStats s;
  s.n = n;
  s.m = m;
  s.avg_degree = 2.0 * double(m) / double(n);

  double inv = 0, dsum = 0, dcnt = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (d[i][j] < inf) {
        inv += 1.0 / d[i][j];
        dsum += d[i][j];
        dcnt += 1;
      }
    }
  s.efficiency = inv / (double(n) * double(n - 1));
  s.avg_distance = dcnt == 0 ? kNaN : dsum / dcnt;

  double csum = 0;
  for (NodeId z = 0; z < n; ++z) {
    auto nb = g.neighbors(z);
    if (nb.size() < 2) continue;
    double tri = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (adjacent(g, nb[i], nb[j])) tri += 1;
    csum += 2.0 * tri / (double(nb.size()) * double(nb.size() - 1));
  }
  s.clustering = csum / double(n);

  double k2 = 0;
  for (NodeId v = 0; v < n; ++v) k2 += double(g.degree(v)) * double(g.degree(v));
  s.heterogeneity =
      m == 0 ? kNaN : (k2 / double(n)) / (s.avg_degree * s.avg_degree);

  if (m == 0) {
    s.assortativity = kNaN;
    return s;
  }
  // Pearson over the 2M ordered edge endpoints.
  std::vector<double> js, ks;
  for (auto e : g.edges()) {
    js.push_back(double(g.degree(e.a)));
    ks.push_back(double(g.degree(e.b)));
    js.push_back(double(g.degree(e.b)));
    ks.push_back(double(g.degree(e.a)));
  }
  double mj = 0, mk = 0;
  for (std::size_t i = 0; i < js.size(); ++i) {
    mj += js[i];
    mk += ks[i];
  }
  mj /= double(js.size());
  mk /= double(ks.size());
  double sjk = 0, sjj = 0, skk = 0;
  for (std::size_t i = 0; i < js.size(); ++i) {
    sjk += (js[i] - mj) * (ks[i] - mk);
    sjj += (js[i] - mj) * (js[i] - mj);
    skk += (ks[i] - mk) * (ks[i] - mk);
  }
  s.assortativity = sjj == 0 || skk == 0 ? kNaN : sjk / std::sqrt(sjj * skk);
  return s;
}

}  // namespace refimpl
