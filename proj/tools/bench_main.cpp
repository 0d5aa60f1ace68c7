// Micro-benchmark: the OpenMP period sweep against the same sweep run
// serially, and the saturation-guided window searcher against the naive
// reference enumerator. Wall-clock only; both sides do identical work, so the
// node counts must match between serial and parallel runs.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "distchrom/core.hpp"
#include "distchrom/reference.hpp"
#include "distchrom/solver.hpp"

namespace {

using namespace distchrom;
using Clock = std::chrono::steady_clock;

double run_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void bench_period_sweep(const DistanceSet& d, int k, long long budget) {
  std::printf("period sweep  D={%s}  k=%d  budget=%lld\n", format_distance_set(d).c_str(), k,
              budget);
  SearchConfig cfg;
  cfg.node_budget = budget;
  double serial_ms = 0.0;
  for (int parallel = 0; parallel <= 1; ++parallel) {
    cfg.parallel = parallel != 0;
    auto t0 = Clock::now();
    UpperResult r = upper_bound_search(d, k, cfg);
    double ms = run_ms(t0);
    if (parallel == 0) serial_ms = ms;
    std::printf("  %-8s %10.1f ms   nodes=%-12lld %s\n", parallel ? "parallel" : "serial", ms,
                r.nodes,
                r.found ? ("found period " + std::to_string(r.period)).c_str() : "not found");
    if (parallel && ms > 0.0) std::printf("  speedup  %10.2fx\n", serial_ms / ms);
  }
}

void bench_window(const DistanceSet& d, int k, Int length, long long budget) {
  std::printf("window proof  D={%s}  k=%d  length=%lld  budget=%lld\n",
              format_distance_set(d).c_str(), k, static_cast<long long>(length), budget);
  SquareSet s = square_set(d);
  WindowInstance wi = window_instance(s, length, k);

  auto t0 = Clock::now();
  LowerResult opt = search_window(wi, budget);
  double opt_ms = run_ms(t0);
  const char* opt_verdict = opt.status == WindowStatus::kProof        ? "uncolorable"
                            : opt.status == WindowStatus::kColorable  ? "colorable"
                                                                      : "budget exceeded";
  std::printf("  %-9s %10.1f ms   nodes=%-12lld %s\n", "saturation", opt_ms, opt.nodes,
              opt_verdict);

  t0 = Clock::now();
  ReferenceResult ref = reference_window_search(wi, budget);
  double ref_ms = run_ms(t0);
  const char* ref_verdict = ref.budget_exceeded ? "budget exceeded"
                            : ref.colorable     ? "colorable"
                                                : "uncolorable";
  std::printf("  %-9s %10.1f ms   nodes=%-12lld %s\n", "naive", ref_ms, ref.nodes, ref_verdict);
  if (opt_ms > 0.0) std::printf("  ratio    %10.2fx\n", ref_ms / opt_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp: %d threads\n\n", omp_get_max_threads());
#else
  std::printf("openmp: not compiled in\n\n");
#endif

  // Unsatisfiable sweep: a = 8 is not congruent to 2 or 4 mod 7, so no
  // 7-coloring of G({1,8,9}) is periodic and every feasible period burns its
  // full probe cap. This is the embarrassingly parallel workload.
  bench_period_sweep(DistanceSet({1, 8, 9}), 7, 2'000'000);
  std::printf("\n");

  // Exhaustive uncolorability proofs: the saturation-guided searcher against
  // the reference enumerator on windows both can finish.
  bench_window(DistanceSet({1, 6}), 5, 24, 400'000'000);
  std::printf("\n");
  bench_window(DistanceSet({1, 9}), 5, 38, 400'000'000);
  return 0;
}
