#pragma once

#include <cstdint>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkpred/predictors.hpp"

namespace linkpred {

/// Raised when the requested grid is too large for one machine; the message
/// carries the work estimate.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComplexityConfig {
  std::vector<std::uint32_t> sizes;
  std::vector<double> avg_degrees;
  std::uint64_t seed = 1;
  int repeats = 7;
  int threads = 0;
  double max_estimated_seconds = 1800;
};

struct ComplexityCell {
  std::uint32_t n = 0;
  double avg_degree = 0;
  ScorerKind kind = ScorerKind::mi;
  double ms = 0;  // best-of-repeats wall time of build + full candidate scoring
};

/// Least-squares slope of log(time) vs log(avg_degree) at fixed n.
struct ComplexityFit {
  std::uint32_t n = 0;
  ScorerKind kind = ScorerKind::mi;
  double exponent = 0;
};

struct ComplexityReport {
  std::vector<ComplexityCell> cells;
  std::vector<ComplexityFit> fits;
};

/// Generates an Erdos-Renyi graph per (n, <k>) cell with p = <k>/(n-1),
/// then times full candidate scoring (precompute + every non-edge pair) for
/// the mi, car and cra predictors. Same seed, same graphs, same timing grid.
ComplexityReport run_complexity(const ComplexityConfig& cfg);

nlohmann::json complexity_to_json(const ComplexityReport& r);
std::string complexity_table(const ComplexityReport& r);

}  // namespace linkpred
