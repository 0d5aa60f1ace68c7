#include "distchrom/solver.hpp"

#include <algorithm>

#include "distchrom/families.hpp"

namespace distchrom {

SearchConfig default_config(const SquareSet& s) {
  SearchConfig cfg;
  cfg.max_period = 4 * s.max() + 4;
  cfg.max_window = 6 * s.max();
  cfg.node_budget = 100'000'000;
  return cfg;
}

namespace {

SearchConfig with_defaults(const SquareSet& s, SearchConfig cfg) {
  SearchConfig def = default_config(s);
  if (cfg.max_period <= 0) cfg.max_period = def.max_period;
  if (cfg.max_window <= 0) cfg.max_window = def.max_window;
  if (cfg.node_budget <= 0) cfg.node_budget = def.node_budget;
  return cfg;
}

}  // namespace

CirculantResult color_circulant(const CirculantInstance& inst, long long node_budget) {
  const Int p = inst.period;
  const int k = inst.colors;
  const std::vector<Int>& conn = inst.connection;
  CirculantResult out;
  std::vector<int> color(static_cast<size_t>(p), 0);
  // used_before[v]: colors in use among vertices < v. Canonical introduction
  // order keeps them contiguous, so the count equals the max color.
  std::vector<int> used_before(static_cast<size_t>(p) + 1, 0);

  auto feasible = [&](Int v, int c) {
    // conn is symmetric under negation mod p, so every edge incident to v
    // from below shows up as a plain difference in conn.
    for (Int d : conn) {
      if (d > v) break;
      if (color[static_cast<size_t>(v - d)] == c) return false;
    }
    return true;
  };

  Int v = 0;
  while (true) {
    const int limit = std::min(used_before[static_cast<size_t>(v)] + 1, k);
    int chosen = 0;
    for (int c = color[static_cast<size_t>(v)] + 1; c <= limit; ++c)
      if (feasible(v, c)) { chosen = c; break; }
    if (chosen == 0) {
      color[static_cast<size_t>(v)] = 0;
      if (v == 0) {
        out.status = CirculantStatus::kUnsat;
        return out;
      }
      --v;
      continue;
    }
    color[static_cast<size_t>(v)] = chosen;
    if (++out.nodes > node_budget) {
      out.status = CirculantStatus::kBudgetExceeded;
      return out;
    }
    used_before[static_cast<size_t>(v) + 1] =
        std::max(used_before[static_cast<size_t>(v)], chosen);
    if (v + 1 == p) {
      out.status = CirculantStatus::kFound;
      out.word = PatternWord{std::move(color)};
      return out;
    }
    ++v;
  }
}

UpperResult upper_bound_search(const DistanceSet& d, int k, const SearchConfig& cfg0) {
  if (k < 1) throw std::invalid_argument("colors must be >= 1");
  SquareSet s = square_set(d);
  SearchConfig cfg = with_defaults(s, cfg0);

  std::vector<Int> periods = cfg.periods;
  if (periods.empty()) {
    periods.reserve(static_cast<size_t>(cfg.max_period));
    for (Int p = 1; p <= cfg.max_period; ++p) periods.push_back(p);
  } else {
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
  }

  struct Probe {
    Int p;
    CirculantInstance inst;
    bool settled = false;  // conclusively unsatisfiable at this k
  };
  std::vector<Probe> probes;
  for (Int p : periods) {
    if (p < 1) continue;
    auto red = reduce_to_circulant(s, p, k);
    if (auto* inst = std::get_if<CirculantInstance>(&red))
      probes.push_back({p, std::move(*inst)});
  }

  UpperResult out;

  // Escalating per-probe caps: cheap pass first so one stubborn period
  // cannot starve the small satisfiable ones further along.
  std::vector<long long> caps;
  for (long long c : {10'000LL, 1'000'000LL})
    if (c < cfg.node_budget) caps.push_back(c);
  caps.push_back(cfg.node_budget);

  for (long long cap : caps) {
    std::vector<size_t> active;
    for (size_t i = 0; i < probes.size(); ++i)
      if (!probes[i].settled) active.push_back(i);
    if (active.empty()) break;

    // Shrink chunks as caps grow so the cumulative cutoff stays responsive.
    const size_t chunk = static_cast<size_t>(
        std::clamp<long long>(cfg.node_budget / cap, 1, 64));

    for (size_t start = 0; start < active.size(); start += chunk) {
      if (out.nodes >= cfg.node_budget) return out;  // budget spent: not found
      const size_t end = std::min(start + chunk, active.size());
      std::vector<CirculantResult> res(end - start);
      if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(end - start); ++i)
          res[static_cast<size_t>(i)] =
              color_circulant(probes[active[start + static_cast<size_t>(i)]].inst, cap);
      } else {
        for (size_t i = 0; i < end - start; ++i)
          res[i] = color_circulant(probes[active[start + i]].inst, cap);
      }
      for (const CirculantResult& r : res) out.nodes += r.nodes;
      // Ascending scan: the smallest successful period of the pass wins,
      // independent of thread interleaving.
      for (size_t i = 0; i < end - start; ++i) {
        Probe& pr = probes[active[start + i]];
        if (res[i].status == CirculantStatus::kFound) {
          VerificationReport rep = verify(res[i].word, s);
          if (!rep.valid)
            throw InternalCheckFailure("period search produced an invalid word");
          out.found = true;
          out.word = std::move(res[i].word);
          out.period = pr.p;
          return out;
        }
        if (res[i].status == CirculantStatus::kUnsat) pr.settled = true;
      }
    }
  }
  return out;
}

namespace {

class WindowSearcher {
 public:
  WindowSearcher(const WindowInstance& wi, long long budget)
      : n_(wi.length),
        k_(wi.colors),
        diffs_(wi.diffs),
        budget_(budget),
        color_(static_cast<size_t>(n_), 0),
        nbr_count_(static_cast<size_t>(n_) * (static_cast<size_t>(k_) + 1), 0),
        sat_(static_cast<size_t>(n_), 0) {}

  LowerResult run() {
    LowerResult out;
    struct Frame {
      Int v;
      int c;            // last color tried here, 0 = none yet
      int used_before;  // colors in use before this placement
    };
    std::vector<Frame> stack;
    stack.reserve(static_cast<size_t>(n_));
    int used = 0;
    stack.push_back({select(), 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.c != 0) {  // resuming after a deeper dead end
        unassign(f.v, f.c);
        used = f.used_before;
      }
      const int limit = std::min(used + 1, k_);
      int chosen = 0;
      for (int c = f.c + 1; c <= limit; ++c)
        if (nbr_count_[idx(f.v, c)] == 0) { chosen = c; break; }
      if (chosen == 0) {
        stack.pop_back();
        continue;
      }
      if (++nodes_ > budget_) {
        out.status = WindowStatus::kBudgetExceeded;
        out.nodes = nodes_;
        return out;
      }
      f.c = chosen;
      f.used_before = used;
      assign(f.v, chosen);
      used = std::max(used, chosen);
      if (static_cast<Int>(stack.size()) == n_) {
        out.status = WindowStatus::kColorable;
        out.witness = color_;
        out.nodes = nodes_;
        return out;
      }
      stack.push_back({select(), 0, 0});
    }
    out.status = WindowStatus::kProof;
    out.proof = WindowProof{k_, n_, nodes_, true};
    out.nodes = nodes_;
    return out;
  }

 private:
  size_t idx(Int v, int c) const {
    return static_cast<size_t>(v) * (static_cast<size_t>(k_) + 1) +
           static_cast<size_t>(c);
  }

  // Most saturated uncolored vertex, ties to the smallest index. Saturation
  // and index are invariant under color relabeling, so the canonical color
  // restriction in run() still reaches a representative of every coloring.
  Int select() const {
    Int best = 0;
    int best_sat = -1;
    for (Int v = 0; v < n_; ++v)
      if (color_[static_cast<size_t>(v)] == 0 && sat_[static_cast<size_t>(v)] > best_sat) {
        best = v;
        best_sat = sat_[static_cast<size_t>(v)];
      }
    return best;
  }

  void bump(Int u, int c, int delta) {
    int& cnt = nbr_count_[idx(u, c)];
    if (delta > 0) {
      if (cnt++ == 0) ++sat_[static_cast<size_t>(u)];
    } else {
      if (--cnt == 0) --sat_[static_cast<size_t>(u)];
    }
  }

  // Counts are maintained for colored neighbors too; assignments unwind LIFO
  // so the books stay balanced when a vertex is uncolored and recolored.
  void assign(Int v, int c) {
    color_[static_cast<size_t>(v)] = c;
    for (Int d : diffs_) {
      if (v - d >= 0) bump(v - d, c, +1);
      if (v + d < n_) bump(v + d, c, +1);
    }
  }

  void unassign(Int v, int c) {
    color_[static_cast<size_t>(v)] = 0;
    for (Int d : diffs_) {
      if (v - d >= 0) bump(v - d, c, -1);
      if (v + d < n_) bump(v + d, c, -1);
    }
  }

  Int n_;
  int k_;
  std::vector<Int> diffs_;
  long long budget_;
  long long nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> nbr_count_;  // nbr_count_[v][c]: colored neighbors of v with color c
  std::vector<int> sat_;        // distinct colors adjacent to v
};

}  // namespace

LowerResult search_window(const WindowInstance& wi, long long node_budget) {
  return WindowSearcher(wi, node_budget).run();
}

LowerResult lower_bound_search(const DistanceSet& d, int k, const SearchConfig& cfg0) {
  if (k < 1) throw std::invalid_argument("colors must be >= 1");
  SquareSet s = square_set(d);
  SearchConfig cfg = with_defaults(s, cfg0);
  WindowInstance wi = window_instance(s, cfg.max_window, k);
  return search_window(wi, cfg.node_budget);
}

namespace {

// Verified construction for the closed-form families; nullopt otherwise.
std::optional<PatternWord> family_pattern(const FamilyClassification& cls,
                                          const SquareSet& s) {
  std::optional<PatternWord> w;
  switch (cls.family) {
    case Family::kPathPower: w = mod_p_pattern(2 * cls.k + 1); break;
    case Family::kOneA: w = pattern_1a(cls.a); break;
    case Family::kOneAA1: w = pattern_1aa1(cls.a); break;
    case Family::kOneToMA: w = pattern_1ma(cls.m, cls.a); break;
    case Family::kGeneral: return std::nullopt;
  }
  if (!verify(*w, s).valid)
    throw InternalCheckFailure("family pattern failed verification for " +
                               format_distance_set(s.source()));
  return w;
}

// Short windows first: a proof on any prefix window is already sound, and
// the short ones are vastly cheaper when the contradiction is local.
std::vector<Int> window_ladder(Int max_s, Int max_window) {
  std::vector<Int> ns;
  for (Int n : {2 * max_s + 2, 4 * max_s})
    if (n < max_window) ns.push_back(n);
  ns.push_back(max_window);
  return ns;
}

}  // namespace

Chi2Bounds chi2_bounds(const DistanceSet& d0, const SearchConfig& cfg0) {
  NormalizeResult nr = normalize(d0);
  const DistanceSet& d = nr.set;
  SquareSet s = square_set(d);
  SearchConfig cfg = with_defaults(s, cfg0);
  FamilyClassification cls = classify(d);

  Chi2Bounds b;
  b.lo = max_degree(d) + 1;
  b.lo_evidence = clique_certificate(d, 0);
  b.hi = first_fit_bound(s);
  b.hi_evidence = FormulaRef{"first-fit", b.hi};
  if (cls.family != Family::kGeneral && cls.hi < b.hi) {
    b.hi = cls.hi;
    b.hi_evidence = FormulaRef{rule_name(cls.rule), cls.hi};
  }
  if (std::optional<PatternWord> fam = family_pattern(cls, s)) {
    Int colors = fam->color_count();
    if (colors <= b.hi) {
      b.hi = colors;
      b.hi_evidence = *fam;
    }
  }

  while (b.lo < b.hi) {
    const int k = static_cast<int>(b.lo);
    bool raised = false;
    for (Int n : window_ladder(s.max(), cfg.max_window)) {
      SearchConfig wcfg = cfg;
      wcfg.max_window = n;
      LowerResult lr = lower_bound_search(d, k, wcfg);
      if (lr.status == WindowStatus::kProof) {
        b.lo = k + 1;
        b.lo_evidence = lr.proof;
        raised = true;
        break;
      }
      if (lr.status == WindowStatus::kBudgetExceeded) break;
      // colorable at this length; a longer window may still refute
    }
    if (raised) continue;
    UpperResult ur = upper_bound_search(d, k, cfg);
    if (ur.found) {
      b.hi = k;
      b.hi_evidence = std::move(ur.word);
    }
    break;  // either exact now, or neither side can move
  }

  // Standing gap: pull hi down from above while patterns keep turning up.
  while (b.hi - 1 > b.lo) {
    UpperResult ur = upper_bound_search(d, static_cast<int>(b.hi - 1), cfg);
    if (!ur.found) break;
    b.hi = b.hi - 1;
    b.hi_evidence = std::move(ur.word);
  }

  // Exact by formula alone: attempt the search-backed upgrade.
  if (b.lo == b.hi && std::holds_alternative<FormulaRef>(b.hi_evidence)) {
    UpperResult ur = upper_bound_search(d, static_cast<int>(b.hi), cfg);
    if (ur.found) b.hi_evidence = std::move(ur.word);
  }

  if (b.lo > b.hi)
    throw InternalCheckFailure("bounds crossed for " + format_distance_set(d0));
  return b;
}

Chi2Bounds chi2_bounds(const DistanceSet& d) { return chi2_bounds(d, SearchConfig{}); }

}  // namespace distchrom
