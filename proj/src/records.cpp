#include "distchrom/records.hpp"

#include <cmath>
#include <cstdio>

#include "distchrom/patterns.hpp"

namespace distchrom {

namespace {

// Timing carries three decimals in both encodings: the JSON number and the
// CSV text parse back to the same double, keeping the round-trip lossless.
double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", round_ms(ms));
  return buf;
}

}  // namespace

nlohmann::ordered_json record_to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaTag;
  j["d"] = r.d;
  j["normalized"] = r.normalized;
  j["divisor"] = r.divisor;
  j["family"] = r.family;
  j["rule"] = r.rule;
  j["delta"] = r.delta;
  j["square"] = r.square;
  j["lo"] = r.lo;
  j["hi"] = r.hi;
  j["exact"] = r.exact;
  j["evidence"] = r.evidence;
  if (r.search_lo) j["search_lo"] = *r.search_lo;
  if (r.search_hi) j["search_hi"] = *r.search_hi;
  if (r.search_agrees) j["search_agrees"] = *r.search_agrees;
  if (r.timing_ms) j["timing_ms"] = round_ms(*r.timing_ms);
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  OutputRecord r;
  r.d = j.at("d").get<std::string>();
  r.normalized = j.at("normalized").get<std::string>();
  r.divisor = j.at("divisor").get<Int>();
  r.family = j.at("family").get<std::string>();
  r.rule = j.at("rule").get<std::string>();
  r.delta = j.at("delta").get<Int>();
  r.square = j.at("square").get<std::string>();
  r.lo = j.at("lo").get<Int>();
  r.hi = j.at("hi").get<Int>();
  r.exact = j.at("exact").get<bool>();
  r.evidence = j.at("evidence").get<std::string>();
  if (j.contains("search_lo")) r.search_lo = j.at("search_lo").get<Int>();
  if (j.contains("search_hi")) r.search_hi = j.at("search_hi").get<Int>();
  if (j.contains("search_agrees")) r.search_agrees = j.at("search_agrees").get<bool>();
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string csv_escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& row) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < row.size(); ++i) {
    char ch = row[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < row.size() && row[i + 1] == '"') { cur += '"'; ++i; }
        else quoted = false;
      } else cur += ch;
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

namespace {

std::vector<std::string> columns(bool confirm, bool timing) {
  std::vector<std::string> cols = {"d",  "normalized", "divisor", "family",
                                   "rule", "delta",    "square",  "lo",
                                   "hi", "exact",      "evidence"};
  if (confirm) {
    cols.push_back("search_lo");
    cols.push_back("search_hi");
    cols.push_back("search_agrees");
  }
  if (timing) cols.push_back("timing_ms");
  return cols;
}

}  // namespace

std::string record_csv_header(bool confirm, bool timing) {
  std::string out;
  for (const std::string& c : columns(confirm, timing)) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string record_to_csv_row(const OutputRecord& r, bool confirm, bool timing) {
  std::vector<std::string> vals = {
      r.d,
      r.normalized,
      std::to_string(r.divisor),
      r.family,
      r.rule,
      std::to_string(r.delta),
      r.square,
      std::to_string(r.lo),
      std::to_string(r.hi),
      r.exact ? "true" : "false",
      r.evidence,
  };
  if (confirm) {
    vals.push_back(r.search_lo ? std::to_string(*r.search_lo) : "");
    vals.push_back(r.search_hi ? std::to_string(*r.search_hi) : "");
    vals.push_back(r.search_agrees ? (*r.search_agrees ? "true" : "false") : "");
  }
  if (timing) vals.push_back(r.timing_ms ? format_ms(*r.timing_ms) : "");
  std::string out;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(vals[i]);
  }
  return out;
}

OutputRecord record_from_csv_row(const std::string& header, const std::string& row) {
  std::vector<std::string> names = csv_split(header);
  std::vector<std::string> vals = csv_split(row);
  if (names.size() != vals.size()) throw ParseError("csv row width differs from header");
  OutputRecord r;
  for (size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    const std::string& v = vals[i];
    if (n == "d") r.d = v;
    else if (n == "normalized") r.normalized = v;
    else if (n == "divisor") r.divisor = std::stoll(v);
    else if (n == "family") r.family = v;
    else if (n == "rule") r.rule = v;
    else if (n == "delta") r.delta = std::stoll(v);
    else if (n == "square") r.square = v;
    else if (n == "lo") r.lo = std::stoll(v);
    else if (n == "hi") r.hi = std::stoll(v);
    else if (n == "exact") r.exact = (v == "true");
    else if (n == "evidence") r.evidence = v;
    else if (n == "search_lo") { if (!v.empty()) r.search_lo = std::stoll(v); }
    else if (n == "search_hi") { if (!v.empty()) r.search_hi = std::stoll(v); }
    else if (n == "search_agrees") { if (!v.empty()) r.search_agrees = (v == "true"); }
    else if (n == "timing_ms") { if (!v.empty()) r.timing_ms = std::stod(v); }
    else throw ParseError("unknown csv column '" + n + "'");
  }
  return r;
}

nlohmann::ordered_json bounds_to_json(const DistanceSet& input, const Chi2Bounds& b,
                                      std::optional<double> timing_ms) {
  NormalizeResult nr = normalize(input);
  FamilyClassification cls = classify(nr.set);
  nlohmann::ordered_json j;
  j["schema"] = kSchemaTag;
  j["d"] = format_distance_set(input);
  j["normalized"] = format_distance_set(nr.set);
  j["divisor"] = nr.divisor;
  j["family"] = family_name(cls.family);
  j["delta"] = max_degree(nr.set);
  {
    SquareSet sq = square_set(nr.set);
    std::string text;
    for (Int v : sq.elems()) {
      if (!text.empty()) text += ',';
      text += std::to_string(v);
    }
    j["square"] = text;
  }
  j["lo"] = b.lo;
  j["hi"] = b.hi;
  j["exact"] = b.exact();

  nlohmann::ordered_json lo_ev;
  if (const auto* cl = std::get_if<CliqueCertificate>(&b.lo_evidence)) {
    lo_ev["type"] = "clique";
    lo_ev["base"] = cl->base;
    lo_ev["vertices"] = cl->vertices;
  } else {
    const auto& wp = std::get<WindowProof>(b.lo_evidence);
    lo_ev["type"] = "window";
    lo_ev["colors"] = wp.colors;
    lo_ev["length"] = wp.length;
    lo_ev["nodes"] = wp.nodes;
    lo_ev["exhausted"] = wp.exhausted;
  }
  j["lo_evidence"] = lo_ev;

  nlohmann::ordered_json hi_ev;
  if (const auto* w = std::get_if<PatternWord>(&b.hi_evidence)) {
    hi_ev["type"] = "pattern";
    hi_ev["word"] = pattern_to_text(*w);
    hi_ev["period"] = w->period();
    hi_ev["colors"] = w->color_count();
  } else {
    const auto& f = std::get<FormulaRef>(b.hi_evidence);
    hi_ev["type"] = "formula";
    hi_ev["rule"] = f.rule;
    hi_ev["value"] = f.value;
  }
  j["hi_evidence"] = hi_ev;

  if (timing_ms) j["timing_ms"] = round_ms(*timing_ms);
  return j;
}

}  // namespace distchrom
