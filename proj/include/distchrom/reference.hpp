#pragma once

#include <vector>

#include "distchrom/core.hpp"

namespace distchrom {

struct ReferenceResult {
  bool colorable = false;
  bool budget_exceeded = false;
  long long nodes = 0;
  std::vector<int> witness;  // full coloring when colorable
};

/// Deliberately naive decision procedure for window k-colorability: vertices
/// left to right, every color 1..k tried in order, a plain conflict check
/// against earlier neighbors, nothing else. No ordering heuristics, no
/// symmetry breaking, no propagation. Kept as the independent oracle the
/// optimized searcher is tested against; only fit for short windows.
ReferenceResult reference_window_search(const WindowInstance& wi, long long node_budget);

}  // namespace distchrom
