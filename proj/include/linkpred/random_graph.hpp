#pragma once

#include <cstdint>

#include "linkpred/graph.hpp"

namespace linkpred {

/// Erdos-Renyi G(n, p): every pair is an edge independently with probability
/// p. Deterministic in (n, p, seed); labels are "0".."n-1".
Graph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

}  // namespace linkpred
