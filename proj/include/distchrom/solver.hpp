#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "distchrom/core.hpp"
#include "distchrom/patterns.hpp"

namespace distchrom {

struct SearchConfig {
  Int max_period = 0;           // largest period probed for patterns
  Int max_window = 0;           // window length for exhaustive lower bounds
  long long node_budget = 0;    // cap per backtracking search invocation
  std::vector<Int> periods;     // when non-empty: probe exactly these periods
  bool parallel = true;         // probe independent periods with OpenMP
};

/// Defaults sized so all the closed-form families resolve at desk scale:
/// max_period = 4*max(S)+4, max_window = 6*max(S), node_budget = 10^8.
SearchConfig default_config(const SquareSet& s);

enum class CirculantStatus { kFound, kUnsat, kBudgetExceeded };

struct CirculantResult {
  CirculantStatus status = CirculantStatus::kUnsat;
  PatternWord word;      // meaningful when status == kFound
  long long nodes = 0;   // color placements performed
};

/// Exhaustive backtracking over circulant vertices in natural order, colors
/// tried ascending, vertex 0 pinned to color 1 and a new color allowed only
/// once all smaller colors appear. The first solution found is therefore the
/// lexicographically least canonical word; exhaustion without one proves no
/// proper k-coloring of the circulant exists (canonical pruning loses only
/// relabelings). Budget exhaustion is inconclusive and reported as such.
CirculantResult color_circulant(const CirculantInstance& inst, long long node_budget);

struct UpperResult {
  bool found = false;    // false: NotFoundWithinLimits
  PatternWord word;      // verified against S before return
  Int period = 0;
  long long nodes = 0;   // nodes spent across all probes
};

/// Probes periods ascending (1..max_period, or cfg.periods as given) for a
/// p-periodic proper k-coloring of G(S); the smallest successful period wins.
/// Periods with an element of S divisible by p are skipped. Probes run in
/// escalating per-probe node caps so one stubborn period cannot starve the
/// rest; unsatisfiable verdicts are remembered across passes. With
/// cfg.parallel, probes of a chunk run concurrently and the merge stays
/// deterministic. This is a semi-decision: a periodic coloring at every k
/// >= chi2 exists, but with no a-priori period bound NotFoundWithinLimits
/// never certifies absence.
UpperResult upper_bound_search(const DistanceSet& d, int k, const SearchConfig& cfg);

/// Evidence that the window {0..length-1} of G(S) admits no proper coloring
/// with `colors` colors; hence chi2 of the full graph exceeds `colors`.
struct WindowProof {
  int colors = 0;
  Int length = 0;
  long long nodes = 0;
  bool exhausted = false;
};

enum class WindowStatus { kProof, kColorable, kBudgetExceeded };

struct LowerResult {
  WindowStatus status = WindowStatus::kBudgetExceeded;
  WindowProof proof;          // meaningful when status == kProof
  std::vector<int> witness;   // a full coloring when status == kColorable
  long long nodes = 0;
};

/// Exhaustive search of the window of length cfg.max_window at k colors.
/// The searcher picks the most saturated vertex next (most distinct colors
/// among its colored neighbors, ties to the smallest index) and keeps the
/// canonical color restriction; both preserve completeness, so exhaustion is
/// proof. Natural left-to-right order would enumerate ~ (k-2)^a prefixes for
/// two-block difference sets before the long distances constrain anything.
LowerResult lower_bound_search(const DistanceSet& d, int k, const SearchConfig& cfg);

/// Same search on an explicit instance (tests and benchmarks drive this).
LowerResult search_window(const WindowInstance& wi, long long node_budget);

/// Upper bound recorded without a verified pattern: a closed-form value that
/// search has not (yet) confirmed. Never treated as exact evidence.
struct FormulaRef {
  std::string rule;
  Int value = 0;
};

using LoEvidence = std::variant<CliqueCertificate, WindowProof>;
using HiEvidence = std::variant<PatternWord, FormulaRef>;

struct Chi2Bounds {
  Int lo = 0;
  Int hi = 0;
  LoEvidence lo_evidence;
  HiEvidence hi_evidence;

  bool exact() const { return lo == hi; }
};

/// Certified interval for the 2-distance chromatic number of G(D).
/// Normalizes first (gcd does not change the value). lo starts at
/// max_degree+1 backed by a validated clique and rises only through window
/// proofs; hi starts from the first-fit/family formulas (FormulaRef) and is
/// replaced by verified patterns from the constructors or the period search.
/// Ladder: while lo < hi, try window proofs at k = lo over window lengths
/// escalating to cfg.max_window; if none, try a period search at k = lo;
/// stop when neither side moves. Every piece of returned evidence has been
/// re-checked; an evidence failure throws InternalCheckFailure.
Chi2Bounds chi2_bounds(const DistanceSet& d, const SearchConfig& cfg);

/// chi2_bounds with default_config of the normalized square set.
Chi2Bounds chi2_bounds(const DistanceSet& d);

}  // namespace distchrom
