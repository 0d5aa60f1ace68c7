#include "distchrom/reference.hpp"

namespace distchrom {

ReferenceResult reference_window_search(const WindowInstance& wi, long long node_budget) {
  const Int n = wi.length;
  const int k = wi.colors;
  ReferenceResult out;
  std::vector<int> color(static_cast<size_t>(n), 0);
  Int v = 0;
  while (true) {
    int chosen = 0;
    for (int c = color[static_cast<size_t>(v)] + 1; c <= k; ++c) {
      bool ok = true;
      for (Int d : wi.diffs) {
        if (d > v) break;
        if (color[static_cast<size_t>(v - d)] == c) { ok = false; break; }
      }
      if (ok) { chosen = c; break; }
    }
    if (chosen == 0) {
      color[static_cast<size_t>(v)] = 0;
      if (v == 0) return out;  // exhausted: not colorable
      --v;
      continue;
    }
    color[static_cast<size_t>(v)] = chosen;
    if (++out.nodes > node_budget) {
      out.budget_exceeded = true;
      return out;
    }
    if (v + 1 == n) {
      out.colorable = true;
      out.witness = std::move(color);
      return out;
    }
    ++v;
  }
}

}  // namespace distchrom
