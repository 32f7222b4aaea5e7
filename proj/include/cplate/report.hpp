#pragma once

// Tabular output for the command-line tool: fixed column order, CSV with a
// header row or JSON array of objects, numbers rounded to a fixed number of
// significant digits so identical invocations give identical bytes.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cplate {

enum class Format { csv, json };

struct OutputSpec {
  Format format = Format::csv;
  std::string path;  // empty means standard output
  int precision = 6;

  void validate() const {
    if (precision < 3 || precision > 15) {
      throw std::invalid_argument("precision must be in [3, 15]");
    }
  }
};

/// Shortest representation with at most `precision` significant digits.
inline std::string format_number(double value, int precision) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table: row width mismatch");
    rows.push_back(std::move(row));
  }
};

namespace detail {
inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string cell_text(const Cell& cell, int precision) {
  struct Visitor {
    int precision;
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return format_number(v, precision); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{precision}, cell);
}

inline nlohmann::ordered_json cell_json(const Cell& cell, int precision) {
  struct Visitor {
    int precision;
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return std::strtod(format_number(v, precision).c_str(), nullptr);
    }
    nlohmann::ordered_json operator()(long long v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{precision}, cell);
}
}  // namespace detail

inline void write_csv(std::ostream& os, const Table& table, int precision) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << detail::csv_escape(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << detail::cell_text(row[i], precision);
    }
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const Table& table, int precision) {
  // Ordered keys keep the documented column order in every object.
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.columns[i]] = detail::cell_json(row[i], precision);
    }
    rows.push_back(std::move(obj));
  }
  os << rows.dump(2) << '\n';
}

inline void write_table(std::ostream& os, const Table& table, const OutputSpec& spec) {
  if (spec.format == Format::csv) {
    write_csv(os, table, spec.precision);
  } else {
    write_json(os, table, spec.precision);
  }
}

}  // namespace cplate
