#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "distchrom/core.hpp"
#include "distchrom/families.hpp"
#include "distchrom/solver.hpp"

namespace distchrom {

inline constexpr const char* kSchemaTag = "distchrom/1";

/// One classification/search outcome in the shape the CLI emits. The same
/// record renders to a JSON object and a CSV row with identical content.
struct OutputRecord {
  std::string d;
  std::string normalized;
  Int divisor = 1;
  std::string family;
  std::string rule;
  Int delta = 0;
  std::string square;
  Int lo = 0;
  Int hi = 0;
  bool exact = false;
  std::string evidence;
  std::optional<Int> search_lo;          // present with --confirm
  std::optional<Int> search_hi;
  std::optional<bool> search_agrees;     // solver interval inside formula interval
  std::optional<double> timing_ms;       // absent under --no-timing

  bool operator==(const OutputRecord&) const = default;
};

nlohmann::ordered_json record_to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// RFC 4180: fields with commas, quotes, or newlines are quoted, quotes doubled.
std::string csv_escape(const std::string& field);

std::string record_csv_header(bool confirm, bool timing);
std::string record_to_csv_row(const OutputRecord& r, bool confirm, bool timing);
OutputRecord record_from_csv_row(const std::string& header, const std::string& row);

/// Splits one CSV record into fields, honoring RFC 4180 quoting.
std::vector<std::string> csv_split(const std::string& row);

/// Chi2Bounds with its context rendered as the search subcommand's JSON object.
nlohmann::ordered_json bounds_to_json(const DistanceSet& input, const Chi2Bounds& b,
                                      std::optional<double> timing_ms);

}  // namespace distchrom
