#pragma once

#include <cmath>
#include <sstream>
#include <string>

#include "linkpred/graph.hpp"

namespace testutil {

inline linkpred::Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return linkpred::load_edge_list(in);
}

inline bool close(double a, double b, double tol) {
  if (std::isnan(a) && std::isnan(b)) return true;
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= tol;
}

}  // namespace testutil
