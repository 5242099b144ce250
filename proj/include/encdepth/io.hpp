#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "encdepth/result.hpp"

namespace encdepth {

/// Instance file could not be read or parsed. line/col are 1-based where
/// known (0 = not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0, int col = 0);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

enum class FileFormat { csv, json };

/// CSV: one point per row, exact integer/decimal/"p/q" literals, comma
/// separated. The query point comes from `query_override` ("x,y,...") when
/// given, otherwise from the first row.
Instance parse_csv_instance(std::istream& in, const std::optional<std::string>& query_override);

/// {"d": int, "query": [...], "points": [[...], ...]}. Coordinates are JSON
/// integers or quoted literals; bare floating-point numbers are rejected to
/// keep parsing exact.
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path, FileFormat format,
                       const std::optional<std::string>& query_override);

void save_instance(std::ostream& out, const Instance& inst, FileFormat format);

/// One coordinate as JSON: integer when the value is an int64-sized integer,
/// "p/q" string otherwise.
nlohmann::json rational_to_json(const Rational& x);

/// Report schema: {"algorithm", "depth", "witness", "stats"}. Key order and
/// values are deterministic; wall_ms is the only run-to-run varying field.
nlohmann::json report_to_json(const DepthResult& result, const std::string& algorithm,
                              bool include_witness, double wall_ms,
                              std::uint64_t predicate_calls);

/// Inverse of report_to_json for the fields needed to check a report
/// (depth, algorithm, witness sets). Used by the round-trip tests.
struct ParsedReport {
  int depth = 0;
  std::string algorithm;
  nlohmann::json witness;  // null when absent
};
ParsedReport parse_report(const nlohmann::json& j);

/// Guard for splitting a query flag like "3,1/2" into exact coordinates.
Point parse_query_string(const std::string& text);

}  // namespace encdepth
