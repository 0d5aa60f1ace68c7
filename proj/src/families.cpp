#include "distchrom/families.hpp"

#include "distchrom/patterns.hpp"

namespace distchrom {

std::string family_name(Family f) {
  switch (f) {
    case Family::kPathPower: return "path_power";
    case Family::kOneA: return "one_a";
    case Family::kOneAA1: return "one_a_a1";
    case Family::kOneToMA: return "one_to_m_a";
    case Family::kGeneral: return "general";
  }
  return "general";
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::kPathPowerExact: return "path-power-exact";
    case Rule::kOneADichotomy: return "one-a-dichotomy";
    case Rule::kOneAA1Optimal: return "one-a-a1-optimal";
    case Rule::kOneAA1Corridor: return "one-a-a1-corridor";
    case Rule::kOneToMAOptimal: return "one-to-m-a-optimal";
    case Rule::kOneToMACorridor: return "one-to-m-a-corridor";
    case Rule::kGeneralBounds: return "general-bounds";
  }
  return "general-bounds";
}

namespace {

bool is_consecutive_from_one(const std::vector<Int>& e) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != static_cast<Int>(i) + 1) return false;
  return true;
}

}  // namespace

FamilyClassification classify(const DistanceSet& d) {
  const auto& e = d.elems();
  FamilyClassification c;

  // {1,...,k}, k >= 2
  if (e.size() >= 2 && is_consecutive_from_one(e)) {
    c.family = Family::kPathPower;
    c.rule = Rule::kPathPowerExact;
    c.k = static_cast<Int>(e.size());
    c.lo = c.hi = 2 * c.k + 1;
    return c;
  }

  // {1,...,m, a}, m >= 2, a > m+1
  if (e.size() >= 3 && e[0] == 1) {
    Int m = static_cast<Int>(e.size()) - 1;
    bool prefix_ok = true;
    for (Int i = 0; i < m; ++i)
      if (e[static_cast<size_t>(i)] != i + 1) { prefix_ok = false; break; }
    if (prefix_ok && m >= 2) {
      Int a = e.back();  // a > m+1, else the set were consecutive
      c.family = Family::kOneToMA;
      c.m = m;
      c.a = a;
      Int mod = a % (2 * m + 3);
      if (mod == m + 1 || mod == m + 2) {
        c.rule = Rule::kOneToMAOptimal;
        c.lo = c.hi = 2 * m + 3;
      } else {
        c.rule = Rule::kOneToMACorridor;
        c.lo = 2 * m + 4;
        c.hi = 4 * m + 2;
      }
      return c;
    }
  }

  // {1, a, a+1}, a >= 3
  if (e.size() == 3 && e[0] == 1 && e[1] >= 3 && e[2] == e[1] + 1) {
    Int a = e[1];
    c.family = Family::kOneAA1;
    c.a = a;
    Int mod = a % 7;
    if (mod == 2 || mod == 4) {
      c.rule = Rule::kOneAA1Optimal;
      c.lo = c.hi = 7;
    } else {
      c.rule = Rule::kOneAA1Corridor;
      c.lo = 8;
      c.hi = 9;
    }
    return c;
  }

  // {1, a}, a >= 3
  if (e.size() == 2 && e[0] == 1 && e[1] >= 3) {
    Int a = e[1];
    c.family = Family::kOneA;
    c.rule = Rule::kOneADichotomy;
    c.a = a;
    Int mod = a % 5;
    c.lo = c.hi = (mod == 2 || mod == 3) ? 5 : 6;
    return c;
  }

  c.family = Family::kGeneral;
  c.rule = Rule::kGeneralBounds;
  c.lo = max_degree(d) + 1;
  c.hi = first_fit_bound(square_set(d));
  return c;
}

DistanceSet family_instance(Family f, Int m, Int a, Int k) {
  std::vector<Int> e;
  switch (f) {
    case Family::kPathPower:
      if (k < 1) throw UnsupportedFamily("path power needs k >= 1");
      for (Int i = 1; i <= k; ++i) e.push_back(i);
      break;
    case Family::kOneA:
      if (a < 3) throw UnsupportedFamily("{1,a} needs a >= 3");
      e = {1, a};
      break;
    case Family::kOneAA1:
      if (a < 3) throw UnsupportedFamily("{1,a,a+1} needs a >= 3");
      e = {1, a, a + 1};
      break;
    case Family::kOneToMA:
      if (m < 2) throw UnsupportedFamily("{1..m,a} needs m >= 2");
      if (a <= m) throw UnsupportedFamily("{1..m,a} needs a > m");
      for (Int i = 1; i <= m; ++i) e.push_back(i);
      e.push_back(a);
      break;
    case Family::kGeneral:
      throw UnsupportedFamily("no parameter grid for the general family");
  }
  return DistanceSet(std::move(e));
}

std::vector<FamilyClassification> sweep(const SweepRange& range) {
  std::vector<FamilyClassification> out;
  auto classify_point = [&](Int m, Int a, Int k) {
    FamilyClassification c = classify(family_instance(range.family, m, a, k));
    // Keep the grid coordinates even when dispatch lands elsewhere
    // (e.g. a = m+1 classifies as a path power).
    if (range.family == Family::kOneToMA) { c.m = m; c.a = a; }
    if (range.family == Family::kOneA || range.family == Family::kOneAA1) c.a = a;
    if (range.family == Family::kPathPower) c.k = k;
    out.push_back(c);
  };
  switch (range.family) {
    case Family::kPathPower:
      for (Int k = range.k_lo; k <= range.k_hi; ++k) classify_point(0, 0, k);
      break;
    case Family::kOneA:
    case Family::kOneAA1:
      for (Int a = range.a_lo; a <= range.a_hi; ++a) classify_point(0, a, 0);
      break;
    case Family::kOneToMA:
      for (Int m = range.m_lo; m <= range.m_hi; ++m)
        for (Int a = range.a_lo; a <= range.a_hi; ++a) classify_point(m, a, 0);
      break;
    case Family::kGeneral:
      throw UnsupportedFamily("no parameter grid for the general family");
  }
  return out;
}

}  // namespace distchrom
