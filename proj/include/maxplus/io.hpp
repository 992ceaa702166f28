#pragma once

#include <cctype>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "maxplus/linalg.hpp"
#include "maxplus/location.hpp"

// Instance/matrix ingestion and report emission. Parsing leans on nlohmann
// json; emission is hand-rolled so the byte layout is fixed: keys in a set
// order, reals printed with 12 significant digits.

namespace maxplus {

inline std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // fold -0 into 0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

inline std::vector<double> number_array(const nlohmann::json& node, const char* what) {
  if (!node.is_array()) throw error(std::string(what) + ": expected an array");
  std::vector<double> out;
  out.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) throw error(std::string(what) + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

inline nlohmann::json parse_text(const std::string& text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string(what) + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace detail

// { "points": [[...], ...], "weights": [...]?, "caps": [...]? }
inline location_instance parse_instance_json(const std::string& text) {
  const nlohmann::json doc = detail::parse_text(text, "instance");
  if (!doc.is_object() || !doc.contains("points"))
    throw error("instance: expected an object with a \"points\" array");
  if (!doc["points"].is_array() || doc["points"].empty())
    throw error("instance: \"points\" must be a nonempty array of rows");
  std::vector<std::vector<double>> points;
  for (const auto& row : doc["points"])
    points.push_back(detail::number_array(row, "instance points"));
  std::vector<double> weights;
  if (doc.contains("weights")) weights = detail::number_array(doc["weights"], "instance weights");
  std::optional<std::vector<double>> caps;
  if (doc.contains("caps")) caps = detail::number_array(doc["caps"], "instance caps");
  return location_instance(std::move(points), std::move(weights), std::move(caps));
}

// CSV convenience form: one point per line, `x1,...,xn,w` or `x1,...,xn,w,d`
// when caps are expected.
inline location_instance parse_instance_csv(const std::string& text, bool with_caps) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw error("csv: cannot parse \"" + cell + "\" as a number");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw error("csv: no data rows");
  const std::size_t width = rows.front().size();
  const std::size_t trailing = with_caps ? 2 : 1;
  if (width < trailing + 1) throw error("csv: rows are too short");
  std::vector<std::vector<double>> points;
  std::vector<double> weights, caps;
  for (const auto& row : rows) {
    if (row.size() != width) throw error("csv: ragged rows");
    points.emplace_back(row.begin(), row.end() - static_cast<long>(trailing));
    weights.push_back(row[width - trailing]);
    if (with_caps) caps.push_back(row[width - 1]);
  }
  return location_instance(std::move(points), std::move(weights),
                           with_caps ? std::optional(std::move(caps)) : std::nullopt);
}

// A 2D JSON array of numbers; null encodes the zero element.
inline mat parse_matrix_json(const std::string& text) {
  const nlohmann::json doc = detail::parse_text(text, "matrix");
  if (!doc.is_array() || doc.empty()) throw error("matrix: expected a nonempty 2D array");
  const std::size_t rows = doc.size();
  if (!doc[0].is_array() || doc[0].empty())
    throw error("matrix: expected a nonempty 2D array");
  const std::size_t cols = doc[0].size();
  mat a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!doc[i].is_array() || doc[i].size() != cols) throw error("matrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& cell = doc[i][j];
      if (cell.is_null()) continue;
      if (!cell.is_number()) throw error("matrix: entries must be numbers or null");
      a(i, j) = scalar(cell.get<double>());
    }
  }
  return a;
}

struct sample_row {
  std::vector<double> alpha;
  std::vector<double> x;
  double objective;
  std::optional<bool> feasible;
};

struct report_doc {
  double lambda;
  std::optional<double> lambda0;
  std::vector<double> p, q;
  bool exact;
  std::vector<sample_row> samples;
  std::optional<std::pair<double, double>> oracle;  // value, gap
};

namespace detail {

inline void append_array(std::string& out, const std::vector<double>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += format_real(xs[i]);
  }
  out += ']';
}

}  // namespace detail

inline std::string write_report(const report_doc& doc) {
  std::string out = "{\n";
  out += "  \"lambda\": " + format_real(doc.lambda) + ",\n";
  if (doc.lambda0) out += "  \"lambda0\": " + format_real(*doc.lambda0) + ",\n";
  out += "  \"p\": ";
  detail::append_array(out, doc.p);
  out += ",\n  \"q\": ";
  detail::append_array(out, doc.q);
  out += ",\n  \"exact\": ";
  out += doc.exact ? "true" : "false";
  out += ",\n  \"samples\": [\n";
  for (std::size_t i = 0; i < doc.samples.size(); ++i) {
    const sample_row& s = doc.samples[i];
    out += "    {\"alpha\": ";
    detail::append_array(out, s.alpha);
    out += ", \"x\": ";
    detail::append_array(out, s.x);
    out += ", \"objective\": " + format_real(s.objective);
    if (s.feasible) {
      out += ", \"feasible\": ";
      out += *s.feasible ? "true" : "false";
    }
    out += i + 1 < doc.samples.size() ? "},\n" : "}\n";
  }
  out += "  ]";
  if (doc.oracle) {
    out += ",\n  \"oracle\": {\"value\": " + format_real(doc.oracle->first) +
           ", \"gap\": " + format_real(doc.oracle->second) + "}";
  }
  out += "\n}\n";
  return out;
}

struct eig_doc {
  double lambda;
  std::vector<std::vector<double>> basis;
  std::optional<std::pair<double, double>> oracle;  // value, gap
};

inline std::string write_eig_report(const eig_doc& doc) {
  std::string out = "{\n";
  out += "  \"lambda\": " + format_real(doc.lambda) + ",\n";
  out += "  \"basis\": [\n";
  for (std::size_t i = 0; i < doc.basis.size(); ++i) {
    out += "    ";
    detail::append_array(out, doc.basis[i]);
    out += i + 1 < doc.basis.size() ? ",\n" : "\n";
  }
  out += "  ]";
  if (doc.oracle) {
    out += ",\n  \"oracle\": {\"value\": " + format_real(doc.oracle->first) +
           ", \"gap\": " + format_real(doc.oracle->second) + "}";
  }
  out += "\n}\n";
  return out;
}

}  // namespace maxplus
