#pragma once

#include <string>
#include <vector>

#include "distchrom/core.hpp"

namespace distchrom {

enum class Family { kPathPower, kOneA, kOneAA1, kOneToMA, kGeneral };

// Which closed-form rule produced a classification.
enum class Rule {
  kPathPowerExact,    // D = {1..k}: chi2 = 2k+1
  kOneADichotomy,     // D = {1,a}: 5 iff a = 2,3 mod 5, else 6
  kOneAA1Optimal,     // D = {1,a,a+1}, a = 2,4 mod 7: chi2 = 7
  kOneAA1Corridor,    // D = {1,a,a+1} otherwise: 8..9
  kOneToMAOptimal,    // D = {1..m,a}, a = m+1,m+2 mod 2m+3: chi2 = 2m+3
  kOneToMACorridor,   // D = {1..m,a} otherwise: 2m+4..4m+2
  kGeneralBounds,     // anything else: max_degree+1 .. first_fit
};

std::string family_name(Family f);
std::string rule_name(Rule r);

/// Closed-form bounds for the 2-distance chromatic number of G(D).
/// lo == hi means the value is known exactly for the family.
struct FamilyClassification {
  Family family = Family::kGeneral;
  Rule rule = Rule::kGeneralBounds;
  Int lo = 0;
  Int hi = 0;
  // Parameters as applicable to the family (0 when not meaningful).
  Int m = 0;
  Int a = 0;
  Int k = 0;

  bool exact() const { return lo == hi; }
};

/// Dispatches in order: path power {1..k}, {1..m,a} with m >= 2, {1,a,a+1},
/// {1,a}, else general. Expects a normalized set (gcd 1); callers that skip
/// normalization simply land in the general bucket more often.
FamilyClassification classify(const DistanceSet& d);

/// The distance set a family grid point denotes. Unused parameters are
/// ignored per family; throws UnsupportedFamily for out-of-range parameters
/// (e.g. a <= m) and for Family::kGeneral.
DistanceSet family_instance(Family f, Int m, Int a, Int k);

struct SweepRange {
  Family family = Family::kOneA;
  Int m_lo = 0, m_hi = 0;
  Int a_lo = 0, a_hi = 0;
  Int k_lo = 0, k_hi = 0;
};

/// Classification across a parameter grid, row-major with m outermost.
/// Throws UnsupportedFamily if any grid point is out of range.
std::vector<FamilyClassification> sweep(const SweepRange& range);

}  // namespace distchrom
