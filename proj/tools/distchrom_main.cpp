// Command-line surface: square sets, family classification, pattern
// construction and verification, certified chi2 search, and sweep tables.
//
// Exit codes (stable): 0 success, 1 well-formed negative outcome (invalid
// pattern, bounds not exact, coloring not found), 2 malformed input,
// 3 unsupported family, 4 internal consistency failure.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <tuple>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "distchrom/core.hpp"
#include "distchrom/families.hpp"
#include "distchrom/patterns.hpp"
#include "distchrom/records.hpp"
#include "distchrom/solver.hpp"

namespace {

using namespace distchrom;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

std::string join_ints(const std::vector<Int>& v) {
  std::string out;
  for (Int x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

// Human-readable justification of a closed-form classification. Stored in the
// record's evidence field; search evidence (patterns, proofs) replaces it in
// the search subcommand's richer output.
std::string rule_evidence(const FamilyClassification& c) {
  switch (c.rule) {
    case Rule::kPathPowerExact:
      return "clique of 2k+1 consecutive vertices; rainbow of the same size";
    case Rule::kOneADichotomy:
      return (c.a % 5 == 2 || c.a % 5 == 3) ? "a mod 5 in {2,3}" : "a mod 5 not in {2,3}";
    case Rule::kOneAA1Optimal:
      return "a mod 7 in {2,4}";
    case Rule::kOneAA1Corridor:
      return "a mod 7 not in {2,4}";
    case Rule::kOneToMAOptimal:
      return "a mod 2m+3 in {m+1,m+2}";
    case Rule::kOneToMACorridor:
      return "a mod 2m+3 not in {m+1,m+2}";
    case Rule::kGeneralBounds:
      return "clique and first-fit bounds";
  }
  return "";
}

OutputRecord make_record(const DistanceSet& input, const NormalizeResult& nr,
                         const FamilyClassification& cls, std::optional<double> timing) {
  OutputRecord r;
  r.d = format_distance_set(input);
  r.normalized = format_distance_set(nr.set);
  r.divisor = nr.divisor;
  r.family = family_name(cls.family);
  r.rule = rule_name(cls.rule);
  r.delta = max_degree(nr.set);
  r.square = join_ints(square_set(nr.set).elems());
  r.lo = cls.lo;
  r.hi = cls.hi;
  r.exact = cls.exact();
  r.evidence = rule_evidence(cls);
  r.timing_ms = timing;
  return r;
}

void print_human(const OutputRecord& r) {
  std::cout << "d: " << r.d << "\n";
  if (r.divisor != 1)
    std::cout << "normalized: " << r.normalized << " (divided by " << r.divisor << ")\n";
  std::cout << "family: " << r.family << "\n";
  std::cout << "rule: " << r.rule << "\n";
  std::cout << "delta: " << r.delta << "\n";
  std::cout << "square: " << r.square << "\n";
  if (r.exact)
    std::cout << "chi2: " << r.lo << "\n";
  else
    std::cout << "chi2: in [" << r.lo << ", " << r.hi << "]\n";
  std::cout << "evidence: " << r.evidence << "\n";
  if (r.timing_ms) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", *r.timing_ms);
    std::cout << "timing_ms: " << buf << "\n";
  }
}

int cmd_square(const std::string& d_text) {
  DistanceSet d = parse_distance_set(d_text);
  std::cout << join_ints(square_set(d).elems()) << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& d_text, const std::string& format, bool no_normalize,
                 bool no_timing) {
  auto t0 = Clock::now();
  DistanceSet input = parse_distance_set(d_text);
  NormalizeResult nr = no_normalize ? NormalizeResult{input, 1} : normalize(input);
  FamilyClassification cls = classify(nr.set);
  std::optional<double> timing;
  if (!no_timing) timing = round_ms(ms_since(t0));
  OutputRecord r = make_record(input, nr, cls, timing);
  if (format == "json") {
    std::cout << record_to_json(r).dump() << "\n";
  } else if (format == "csv") {
    std::cout << record_csv_header(false, timing.has_value()) << "\n"
              << record_to_csv_row(r, false, timing.has_value()) << "\n";
  } else {
    print_human(r);
  }
  return kExitOk;
}

// The constructor pattern for the classified family; throws UnsupportedFamily
// when no closed form applies.
PatternWord family_pattern_for(const FamilyClassification& cls) {
  switch (cls.family) {
    case Family::kPathPower:
      return mod_p_pattern(2 * cls.k + 1);
    case Family::kOneA:
      return pattern_1a(cls.a);
    case Family::kOneAA1:
      return pattern_1aa1(cls.a);
    case Family::kOneToMA:
      return pattern_1ma(cls.m, cls.a);
    case Family::kGeneral:
      break;
  }
  throw UnsupportedFamily("no closed-form pattern for this distance set; try the search subcommand");
}

int cmd_pattern(const std::string& d_text, bool no_normalize) {
  DistanceSet input = parse_distance_set(d_text);
  NormalizeResult nr = no_normalize ? NormalizeResult{input, 1} : normalize(input);
  FamilyClassification cls = classify(nr.set);
  PatternWord w = family_pattern_for(cls);
  auto check = [](const PatternWord& word, const DistanceSet& set) {
    VerificationReport rep = verify(word, square_set(set));
    if (!rep.valid)
      throw InternalCheckFailure("constructed pattern failed verification for {" +
                                 format_distance_set(set) + "}");
  };
  check(w, nr.set);
  if (nr.divisor > 1) {
    // Undo the gcd reduction so the printed word colors the set as typed.
    w = stretch_pattern(w, nr.divisor);
    check(w, input);
  }
  std::cout << pattern_to_text(w) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& pattern_text, const std::string& d_text) {
  PatternWord w = parse_pattern_text(pattern_text);
  DistanceSet d = parse_distance_set(d_text);
  SquareSet s = square_set(d);
  VerificationReport rep = verify(w, s);
  std::cout << "pattern: " << pattern_to_text(w) << "\n"
            << "period: " << rep.period << "\n"
            << "colors: " << rep.color_count << "\n"
            << "square: " << join_ints(s.elems()) << "\n";
  if (rep.valid) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << "invalid\n";
  for (Int dv : rep.period_divisors)
    std::cout << "  distance " << dv << " is a multiple of the period\n";
  for (const Violation& v : rep.violations)
    std::cout << "  positions " << v.index << " and " << v.other << " share a color at distance "
              << v.distance << "\n";
  return kExitNegative;
}

struct SearchOpts {
  std::string d_text;
  int colors = 0;  // 0: not given
  Int max_period = 0;
  Int max_window = 0;
  long long budget = 0;
  bool exact = false;
  bool serial = false;
  bool no_timing = false;
};

int cmd_search(const SearchOpts& o) {
  auto t0 = Clock::now();
  DistanceSet input = parse_distance_set(o.d_text);
  SearchConfig cfg;
  cfg.max_period = o.max_period;
  cfg.max_window = o.max_window;
  cfg.node_budget = o.budget;
  cfg.parallel = !o.serial;

  if (o.colors > 0) {
    NormalizeResult nr = normalize(input);
    UpperResult ur = upper_bound_search(nr.set, o.colors, cfg);
    if (ur.found && nr.divisor > 1) {
      ur.word = stretch_pattern(ur.word, nr.divisor);
      ur.period *= nr.divisor;
      if (!verify(ur.word, square_set(input)).valid)
        throw InternalCheckFailure("stretched word failed verification for the input set");
    }
    nlohmann::ordered_json j;
    j["schema"] = kSchemaTag;
    j["d"] = format_distance_set(input);
    j["normalized"] = format_distance_set(nr.set);
    j["divisor"] = nr.divisor;
    j["colors"] = o.colors;
    j["found"] = ur.found;
    if (ur.found) {
      j["word"] = pattern_to_text(ur.word);
      j["period"] = ur.period;
    }
    j["nodes"] = ur.nodes;
    if (!o.no_timing) j["timing_ms"] = round_ms(ms_since(t0));
    std::cout << j.dump() << "\n";
    return ur.found ? kExitOk : kExitNegative;
  }

  Chi2Bounds b = chi2_bounds(input, cfg);
  std::optional<double> timing;
  if (!o.no_timing) timing = ms_since(t0);
  std::cout << bounds_to_json(input, b, timing).dump() << "\n";
  return (o.exact && !b.exact()) ? kExitNegative : kExitOk;
}

struct TableOpts {
  std::string family;
  std::string range;
  std::string format = "csv";
  bool confirm = false;
  bool serial = false;
  bool no_timing = false;
};

Family parse_family_name(const std::string& text) {
  for (Family f : {Family::kPathPower, Family::kOneA, Family::kOneAA1, Family::kOneToMA})
    if (family_name(f) == text) return f;
  if (text == family_name(Family::kGeneral))
    throw UnsupportedFamily("no parameter grid for the general family");
  throw ParseError("unknown family '" + text + "'");
}

std::map<std::string, std::pair<Int, Int>> parse_range_vars(const std::string& text) {
  std::map<std::string, std::pair<Int, Int>> vars;
  if (text.empty()) throw ParseError("empty range");
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string seg = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t eq = seg.find('=');
    if (eq == std::string::npos) throw ParseError("range segment '" + seg + "' lacks '='");
    std::string name = seg.substr(0, eq);
    std::string span = seg.substr(eq + 1);
    if (name != "m" && name != "a" && name != "k")
      throw ParseError("unknown range variable '" + name + "'");
    if (vars.count(name)) throw ParseError("range variable '" + name + "' given twice");
    Int lo = 0, hi = 0;
    size_t dots = span.find("..");
    auto parse_int = [](const std::string& s) {
      Int v = 0;
      const char* first = s.data();
      const char* last = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || ptr != last || s.empty())
        throw ParseError("not an integer: '" + s + "'");
      return v;
    };
    if (dots == std::string::npos) {
      lo = hi = parse_int(span);
    } else {
      lo = parse_int(span.substr(0, dots));
      hi = parse_int(span.substr(dots + 2));
    }
    if (lo > hi) throw ParseError("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
    vars[name] = {lo, hi};
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == text.size()) throw ParseError("trailing comma in range");
  }
  return vars;
}

SweepRange parse_sweep_range(Family f, const std::string& text) {
  auto vars = parse_range_vars(text);
  SweepRange sr;
  sr.family = f;
  auto take = [&vars](const std::string& name) {
    auto it = vars.find(name);
    if (it == vars.end()) throw ParseError("family needs range variable '" + name + "'");
    auto span = it->second;
    vars.erase(it);
    return span;
  };
  switch (f) {
    case Family::kPathPower:
      std::tie(sr.k_lo, sr.k_hi) = take("k");
      break;
    case Family::kOneA:
    case Family::kOneAA1:
      std::tie(sr.a_lo, sr.a_hi) = take("a");
      break;
    case Family::kOneToMA:
      std::tie(sr.m_lo, sr.m_hi) = take("m");
      std::tie(sr.a_lo, sr.a_hi) = take("a");
      break;
    case Family::kGeneral:
      throw UnsupportedFamily("no parameter grid for the general family");
  }
  if (!vars.empty())
    throw ParseError("range variable '" + vars.begin()->first + "' does not apply to this family");
  return sr;
}

int cmd_table(const TableOpts& o) {
  Family fam = parse_family_name(o.family);
  SweepRange sr = parse_sweep_range(fam, o.range);
  std::vector<FamilyClassification> rows = sweep(sr);
  const int n = static_cast<int>(rows.size());
  std::vector<OutputRecord> recs(n);
  std::vector<std::exception_ptr> errs(n);

  // Rows are independent; with --confirm each runs a full solver pass, so the
  // row loop is the parallel level and the per-row solver stays serial.
  // Records land at their input index: output order never depends on timing.
#pragma omp parallel for schedule(dynamic) if (o.confirm && !o.serial)
  for (int i = 0; i < n; ++i) {
    try {
      auto t0 = Clock::now();
      const FamilyClassification& cls = rows[i];
      DistanceSet inst = family_instance(sr.family, cls.m, cls.a, cls.k);
      std::optional<double> timing;
      OutputRecord r = make_record(inst, NormalizeResult{inst, 1}, cls, timing);
      if (o.confirm) {
        SearchConfig cfg;
        cfg.parallel = false;
        Chi2Bounds b = chi2_bounds(inst, cfg);
        r.search_lo = b.lo;
        r.search_hi = b.hi;
        r.search_agrees = cls.lo <= b.lo && b.hi <= cls.hi;
      }
      if (!o.no_timing) r.timing_ms = round_ms(ms_since(t0));
      recs[i] = std::move(r);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (int i = 0; i < n; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);

  bool timing_col = !o.no_timing;
  if (o.format == "json") {
    for (const OutputRecord& r : recs) std::cout << record_to_json(r).dump() << "\n";
  } else {
    std::cout << record_csv_header(o.confirm, timing_col) << "\n";
    for (const OutputRecord& r : recs)
      std::cout << record_to_csv_row(r, o.confirm, timing_col) << "\n";
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"2-distance colorings of integer distance graphs"};
  app.require_subcommand(1);

  auto* sq = app.add_subcommand("square", "Print the square set D^2 of a distance set");
  std::string sq_d;
  sq->add_option("d", sq_d, "comma-separated distances, e.g. 1,2,5")->required();

  auto* cl = app.add_subcommand("classify", "Family classification and closed-form bounds");
  std::string cl_d, cl_format = "human";
  bool cl_no_normalize = false, cl_no_timing = false;
  cl->add_option("d", cl_d, "comma-separated distances")->required();
  cl->add_option("--format", cl_format, "human, json, or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));
  cl->add_flag("--no-normalize", cl_no_normalize, "skip the gcd reduction");
  cl->add_flag("--no-timing", cl_no_timing, "omit the timing field");

  auto* pa = app.add_subcommand("pattern", "Print a verified periodic coloring pattern");
  std::string pa_d;
  bool pa_no_normalize = false;
  pa->add_option("d", pa_d, "comma-separated distances")->required();
  pa->add_flag("--no-normalize", pa_no_normalize, "skip the gcd reduction");

  auto* ve = app.add_subcommand("verify", "Check a pattern against a distance set");
  std::string ve_pattern, ve_d;
  ve->add_option("pattern", ve_pattern, "pattern text, e.g. 12345 or 1.2.3.4.5")->required();
  ve->add_option("d", ve_d, "comma-separated distances")->required();

  auto* se = app.add_subcommand("search", "Certified chi2 bounds by exhaustive search");
  SearchOpts so;
  se->add_option("d", so.d_text, "comma-separated distances")->required();
  auto* se_colors =
      se->add_option("--colors", so.colors, "only look for a periodic coloring with this many colors")
          ->check(CLI::PositiveNumber);
  se->add_option("--max-period", so.max_period, "largest period probed")->check(CLI::PositiveNumber);
  se->add_option("--max-window", so.max_window, "window length for lower-bound proofs")
      ->check(CLI::PositiveNumber);
  se->add_option("--budget", so.budget, "node budget per search invocation")
      ->check(CLI::PositiveNumber);
  se->add_flag("--exact", so.exact, "exit 1 unless the bounds close")->excludes(se_colors);
  se->add_flag("--serial", so.serial, "disable parallel period probes");
  se->add_flag("--no-timing", so.no_timing, "omit the timing field");

  auto* ta = app.add_subcommand("table", "Classification table over a parameter grid");
  TableOpts to;
  ta->add_option("--family", to.family, "path_power, one_a, one_a_a1, or one_to_m_a")->required();
  ta->add_option("--range", to.range, "grid, e.g. a=3..7 or m=2..3,a=4..12")->required();
  ta->add_option("--format", to.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ta->add_flag("--confirm", to.confirm, "run the solver per row and record agreement");
  ta->add_flag("--serial", to.serial, "disable parallel rows");
  ta->add_flag("--no-timing", to.no_timing, "omit the timing column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  if (sq->parsed()) return cmd_square(sq_d);
  if (cl->parsed()) return cmd_classify(cl_d, cl_format, cl_no_normalize, cl_no_timing);
  if (pa->parsed()) return cmd_pattern(pa_d, pa_no_normalize);
  if (ve->parsed()) return cmd_verify(ve_pattern, ve_d);
  if (se->parsed()) return cmd_search(so);
  if (ta->parsed()) return cmd_table(to);
  return kExitParse;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const InternalCheckFailure& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
