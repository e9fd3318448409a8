#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "imkit/graph.hpp"

namespace imkit {

// Output of every selector. estimates[i] is the selector's own estimate of
// the influence of the first i+1 seeds (cumulative, hence non-decreasing).
struct SeedSelectionResult {
  std::vector<VertexId> seeds;
  std::vector<double> estimates;
  std::chrono::duration<double> wall_time{0.0};
  std::string algorithm;
};

}  // namespace imkit
