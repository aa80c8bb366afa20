#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "residuate/concepts.hpp"
#include "residuate/legendre.hpp"
#include "residuate/qcategory.hpp"
#include "residuate/tight_span.hpp"

namespace residuate::io {

using Json = nlohmann::ordered_json;

struct Style {
  bool decimal = false;  // lossy, for people
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  return *it;
}

inline const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw Error(ErrorCode::parse_error, std::string("field '") + key + "' must be an array");
  return v;
}

inline void require_type(const Json& j, std::string_view type) {
  auto it = j.find("type");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != type) {
    throw Error(ErrorCode::parse_error, "expected an object with \"type\": \"" + std::string(type) + "\"");
  }
}

inline IndexSet labels(const Json& j, const char* key) {
  std::vector<std::string> out;
  for (const auto& l : array_field(j, key)) {
    if (!l.is_string()) throw Error(ErrorCode::parse_error, std::string("labels in '") + key + "' must be strings");
    out.push_back(l.get<std::string>());
  }
  return IndexSet(std::move(out));
}

/// Strings go through the literal parser; JSON numbers are read from their
/// decimal text, so 0.1 means 1/10.
inline std::string literal(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw Error(ErrorCode::parse_error, "expected a scalar literal, got " + v.dump());
}

inline Extended extended(const Json& v) { return parse_extended(literal(v)); }

inline Rational rational(const Json& v) {
  Extended x = extended(v);
  if (!x.is_finite()) throw Error(ErrorCode::invalid_value, "expected a finite number, got " + v.dump());
  return x.value();
}

inline Json scalar(const Extended& x, const Style& style) {
  return style.decimal ? format_extended_decimal(x) : format_extended(x);
}

}  // namespace detail

inline Json to_json(const QuantaleValue& v, const Style& style = {}) {
  if (v.is_boolean()) return v.as_bool() ? "true" : "false";
  return detail::scalar(v.as_extended(), style);
}

inline QuantaleValue value_from_json(QuantaleId q, const Json& v) { return parse_value(q, detail::literal(v)); }

inline Json to_json(const QMatrix& m, const Style& style = {}) {
  Json j;
  j["quantale"] = std::string(quantale_name(m.quantale()));
  j["rows"] = m.rows().labels();
  j["cols"] = m.cols().labels();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.col_count(); ++c) row.push_back(to_json(m.at(r, c), style));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline QuantaleId quantale_from_json(const Json& j) {
  const Json& q = detail::field(j, "quantale");
  if (!q.is_string()) throw Error(ErrorCode::parse_error, "field 'quantale' must be a string");
  return parse_quantale_name(q.get<std::string>());
}

inline QMatrix matrix_from_json(const Json& j) {
  const QuantaleId q = quantale_from_json(j);
  IndexSet rows = detail::labels(j, "rows");
  IndexSet cols = detail::labels(j, "cols");
  const Json& entries = detail::array_field(j, "entries");
  if (entries.size() != rows.size()) {
    throw Error(ErrorCode::shape_mismatch, "matrix has " + std::to_string(rows.size()) + " row labels but " +
                                               std::to_string(entries.size()) + " entry rows");
  }
  std::vector<QuantaleValue> values;
  values.reserve(rows.size() * cols.size());
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols.size()) {
      throw Error(ErrorCode::shape_mismatch, "every entry row needs " + std::to_string(cols.size()) + " entries");
    }
    for (const auto& v : row) values.push_back(value_from_json(q, v));
  }
  return QMatrix(q, std::move(rows), std::move(cols), std::move(values));
}

inline Json to_json(const IsbellPair& p, const Style& style = {}) {
  Json j;
  j["X"] = to_json(p.x(), style);
  j["Y"] = to_json(p.y(), style);
  return j;
}

/// Reads {"X": ..., "Y": ...} and checks it is a fixed pair of `z`.
inline IsbellPair pair_from_json(const QMatrix& z, const Json& j) {
  return IsbellPair::make(z, matrix_from_json(detail::field(j, "X")), matrix_from_json(detail::field(j, "Y")));
}

/// Explicit hulls list their elements bottom first, with the covering
/// relation as index pairs [lower, upper].
inline Json to_json(const IsbellHull& h, const Style& style = {}) {
  Json j;
  j["ambient"] = to_json(h.ambient(), style);
  Json els = Json::array();
  for (const auto& p : h.elements()) els.push_back(to_json(p, style));
  j["elements"] = std::move(els);
  Json covers = Json::array();
  for (const auto& [lo, hi] : covering_pairs(h)) covers.push_back({lo, hi});
  j["covers"] = std::move(covers);
  return j;
}

inline Json to_json(const QCategory& cat, const Style& style = {}) {
  Json j;
  j["type"] = "qcategory";
  const Json m = to_json(cat.matrix(), style);
  for (const auto& [k, v] : m.items()) j[k] = v;
  return j;
}

inline QCategoryCheck qcategory_check_from_json(const Json& j) {
  auto it = j.find("type");
  if (it != j.end() && !(it->is_string() && it->get<std::string>() == "qcategory")) {
    throw Error(ErrorCode::parse_error, "expected \"type\": \"qcategory\"");
  }
  return check_qcategory(matrix_from_json(j));
}

inline QCategory qcategory_from_json(const Json& j) {
  QCategoryCheck check = qcategory_check_from_json(j);
  if (!check.category) {
    std::string msg = "hom matrix violates the Q-category axioms:";
    for (const auto& v : check.violations) msg += " " + describe(v) + ";";
    throw Error(ErrorCode::not_a_category, msg);
  }
  return *check.category;
}

inline Context context_from_json(const Json& j) {
  detail::require_type(j, "context");
  IndexSet objects = detail::labels(j, "objects");
  IndexSet attributes = detail::labels(j, "attributes");
  std::vector<std::vector<bool>> has;
  for (const auto& row : detail::array_field(j, "incidence")) {
    if (!row.is_array()) throw Error(ErrorCode::parse_error, "incidence rows must be arrays");
    std::vector<bool> r;
    for (const auto& v : row) r.push_back(value_from_json(QuantaleId::boolean2, v).as_bool());
    has.push_back(std::move(r));
  }
  return Context(std::move(objects), std::move(attributes), has);
}

inline GeneralizedMetric metric_from_json(const Json& j) {
  detail::require_type(j, "metric");
  IndexSet points = detail::labels(j, "points");
  std::vector<std::vector<Extended>> d;
  for (const auto& row : detail::array_field(j, "d")) {
    if (!row.is_array()) throw Error(ErrorCode::parse_error, "distance rows must be arrays");
    std::vector<Extended> r;
    for (const auto& v : row) r.push_back(detail::extended(v));
    d.push_back(std::move(r));
  }
  return GeneralizedMetric(std::move(points), d);
}

inline Json to_json(const GeneralizedMetric& m, const Style& style = {}) {
  Json j;
  j["type"] = "metric";
  j["points"] = m.points().labels();
  Json d = Json::array();
  for (const auto& from : m.points()) {
    Json row = Json::array();
    for (const auto& to : m.points()) row.push_back(detail::scalar(m.distance(from, to), style));
    d.push_back(std::move(row));
  }
  j["d"] = std::move(d);
  return j;
}

inline std::vector<GridPoint> grid_from_json(const Json& grid) {
  if (!grid.is_array()) throw Error(ErrorCode::parse_error, "a grid is an array of coordinate arrays");
  std::vector<GridPoint> out;
  for (const auto& p : grid) {
    if (!p.is_array()) throw Error(ErrorCode::parse_error, "grid points must be coordinate arrays");
    GridPoint g;
    for (const auto& c : p) g.push_back(detail::rational(c));
    out.push_back(std::move(g));
  }
  return out;
}

inline GridFunction grid_function_from_json(const Json& j) {
  detail::require_type(j, "grid-fn");
  const Json& dim = detail::field(j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() < 1 || dim.get<std::size_t>() > 3) {
    throw Error(ErrorCode::invalid_value, "'dim' must be 1, 2 or 3");
  }
  std::vector<Extended> values;
  for (const auto& v : detail::array_field(j, "values")) values.push_back(detail::extended(v));
  return GridFunction(dim.get<std::size_t>(), grid_from_json(detail::field(j, "grid")), std::move(values));
}

inline Json to_json(const GridFunction& f, const Style& style = {}) {
  Json j;
  j["type"] = "grid-fn";
  j["dim"] = f.dim();
  Json grid = Json::array();
  for (const auto& p : f.grid()) {
    Json coords = Json::array();
    for (const auto& c : p) coords.push_back(detail::scalar(Extended(c), style));
    grid.push_back(std::move(coords));
  }
  j["grid"] = std::move(grid);
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back(detail::scalar(v, style));
  j["values"] = std::move(values);
  return j;
}

}  // namespace residuate::io
