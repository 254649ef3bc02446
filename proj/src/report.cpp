#include "succoef/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace succoef::report {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string short_real(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

template <class RealFormat>
std::string render(const Cell& cell, RealFormat real) {
  struct Visitor {
    RealFormat real;
    std::string operator()(Blank) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double v) const { return real(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{real}, cell);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("Table::add_row: row width differs from header");
  rows_.push_back(std::move(row));
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& os, const Table& table) {
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
  os << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(render(row[i], format_real));
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows()) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& key = table.columns()[i];
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Blank>) {
              obj[key] = nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                obj[key] = v;
              } else {
                obj[key] = nullptr;
              }
            } else {
              obj[key] = v;
            }
          },
          row[i]);
    }
    out.push_back(std::move(obj));
  }
  os << out.dump(2) << '\n';
}

void write_table(std::ostream& os, const Table& table) {
  const auto& cols = table.columns();
  std::vector<std::vector<std::string>> text;
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const auto& row : table.rows()) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string s = render(row[i], short_real);
      if (s.empty()) s = "-";
      width[i] = std::max(width[i], s.size());
      line.push_back(std::move(s));
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  emit(cols);
  for (const auto& line : text) emit(line);
}

void write(std::ostream& os, const Table& table, Format format) {
  switch (format) {
    case Format::csv: write_csv(os, table); return;
    case Format::json: write_json(os, table); return;
    case Format::table: write_table(os, table); return;
  }
}

}  // namespace succoef::report
