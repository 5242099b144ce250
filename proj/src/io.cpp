#include "encdepth/io.hpp"

#include <fstream>
#include <sstream>

namespace encdepth {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Rational> parse_row(const std::string& line, int line_no) {
  std::vector<Rational> row;
  std::size_t start = 0;
  int field = 1;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string cell = trim(comma == std::string::npos ? line.substr(start)
                                                       : line.substr(start, comma - start));
    try {
      row.push_back(parse_rational(cell));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad coordinate literal: ") + e.what(), line_no, field);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
    ++field;
  }
  return row;
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int col)
    : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) +
                                        (col > 0 ? ", field " + std::to_string(col) : "") + ")"
                                  : what),
      line_(line),
      col_(col) {}

Point parse_query_string(const std::string& text) {
  std::vector<Rational> coords = parse_row(text, 0);
  return Point(std::move(coords));
}

Instance parse_csv_instance(std::istream& in, const std::optional<std::string>& query_override) {
  std::vector<std::vector<Rational>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    rows.push_back(parse_row(body, line_no));
  }

  std::optional<Point> query;
  if (query_override) {
    try {
      query = parse_query_string(*query_override);
    } catch (const ParseError&) {
      throw;
    }
  } else {
    if (rows.empty()) throw ParseError("CSV has no rows (need a query row)");
    query = Point(std::move(rows.front()));
    rows.erase(rows.begin());
  }

  const int d = query->dim();
  if (d < 1) throw ParseError("query point has no coordinates");
  std::vector<Point> points;
  points.reserve(rows.size());
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != d)
      throw ParseError("row has " + std::to_string(r.size()) + " coordinates, expected " +
                       std::to_string(d));
    points.emplace_back(std::move(r));
  }
  return make_instance(std::move(points), std::move(*query));
}

namespace {

Rational coordinate_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return Rational(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float())
    throw ParseError(
        "floating-point JSON numbers are inexact; quote the literal instead (e.g. \"0.25\")");
  throw ParseError("coordinate must be an integer or a quoted literal");
}

Point point_from_json(const nlohmann::json& arr, int expect_d) {
  if (!arr.is_array()) throw ParseError("point must be an array of coordinates");
  std::vector<Rational> coords;
  coords.reserve(arr.size());
  for (const auto& v : arr) coords.push_back(coordinate_from_json(v));
  if (expect_d > 0 && static_cast<int>(coords.size()) != expect_d)
    throw ParseError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                     std::to_string(expect_d));
  return Point(std::move(coords));
}

}  // namespace

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("instance JSON must be an object");
  if (!j.contains("query")) throw ParseError("instance JSON missing \"query\"");
  if (!j.contains("points")) throw ParseError("instance JSON missing \"points\"");

  int d = 0;
  if (j.contains("d")) {
    if (!j["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
    d = j["d"].get<int>();
    if (d < 1) throw ParseError("\"d\" must be at least 1");
  }

  Point query = point_from_json(j["query"], d);
  d = query.dim();
  if (!j["points"].is_array()) throw ParseError("\"points\" must be an array");
  std::vector<Point> points;
  points.reserve(j["points"].size());
  for (const auto& row : j["points"]) points.push_back(point_from_json(row, d));
  return make_instance(std::move(points), std::move(query));
}

nlohmann::json rational_to_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p())
    return static_cast<std::int64_t>(x.get_num().get_si());
  return to_string(x);
}

namespace {

nlohmann::json point_to_json(const Point& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coords) arr.push_back(rational_to_json(c));
  return arr;
}

}  // namespace

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json j;
  j["d"] = inst.dimension;
  j["query"] = point_to_json(inst.query);
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : inst.points) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  return j;
}

Instance load_instance(const std::string& path, FileFormat format,
                       const std::optional<std::string>& query_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  if (format == FileFormat::csv) return parse_csv_instance(in, query_override);

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  Instance inst = instance_from_json(j);
  if (query_override) {
    Point q = parse_query_string(*query_override);
    if (q.dim() != inst.dimension)
      throw ParseError("query override has " + std::to_string(q.dim()) +
                       " coordinates, expected " + std::to_string(inst.dimension));
    inst.query = std::move(q);
  }
  return inst;
}

void save_instance(std::ostream& out, const Instance& inst, FileFormat format) {
  if (format == FileFormat::json) {
    out << instance_to_json(inst).dump(2) << '\n';
    return;
  }
  // CSV: query first, then one point per row — loads back without a flag.
  auto write_row = [&out](const Point& p) {
    for (int i = 0; i < p.dim(); ++i) {
      if (i) out << ',';
      out << to_string(p[i]);
    }
    out << '\n';
  };
  write_row(inst.query);
  for (const auto& p : inst.points) write_row(p);
}

namespace {

nlohmann::json witness_to_json(const Witness& witness) {
  if (const auto* pw = std::get_if<PlanarWitness>(&witness)) {
    nlohmann::json intervals = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
      nlohmann::json iv;
      iv["start_rank"] = pw->intervals[static_cast<std::size_t>(i)].start;
      iv["end_rank"] = pw->intervals[static_cast<std::size_t>(i)].end;
      iv["points"] = pw->blocks[static_cast<std::size_t>(i)];
      intervals.push_back(std::move(iv));
    }
    return nlohmann::json{{"type", "planar"}, {"k", pw->k_plus_1}, {"intervals", std::move(intervals)}};
  }
  if (const auto* gw = std::get_if<GeneralWitness>(&witness)) {
    nlohmann::json hs = nlohmann::json::array();
    for (const auto& h : gw->halfspaces)
      hs.push_back(nlohmann::json{{"defining", h.defining}, {"side", h.side}});
    return nlohmann::json{{"type", "general"}, {"k", gw->k}, {"halfspaces", std::move(hs)},
                          {"sets", gw->sets}};
  }
  return nullptr;
}

}  // namespace

nlohmann::json report_to_json(const DepthResult& result, const std::string& algorithm,
                              bool include_witness, double wall_ms,
                              std::uint64_t predicate_calls) {
  nlohmann::json j;
  j["depth"] = result.depth;
  j["algorithm"] = algorithm;
  j["witness"] = include_witness ? witness_to_json(result.witness) : nlohmann::json(nullptr);
  j["stats"] = nlohmann::json{{"predicate_calls", predicate_calls},
                              {"subroutine_calls", result.stats.subroutine_calls},
                              {"wall_ms", wall_ms}};
  return j;
}

ParsedReport parse_report(const nlohmann::json& j) {
  ParsedReport r;
  r.depth = j.at("depth").get<int>();
  r.algorithm = j.at("algorithm").get<std::string>();
  r.witness = j.contains("witness") ? j["witness"] : nlohmann::json(nullptr);
  return r;
}

}  // namespace encdepth
