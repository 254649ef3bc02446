#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace succoef::report {

/// Empty cell (CSV: nothing, JSON: null).
using Blank = std::monostate;
using Cell = std::variant<Blank, std::string, double, std::int64_t, bool>;

enum class Format { csv, json, table };

Format parse_format(std::string_view name);

/// Fixed-schema table: every row has exactly one cell per column.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Reals with 17 significant digits, "\n" line endings, header always present.
void write_csv(std::ostream& os, const Table& table);

/// Array of objects keyed by column name, in column order.
void write_json(std::ostream& os, const Table& table);

/// Aligned plain-text table for terminals.
void write_table(std::ostream& os, const Table& table);

void write(std::ostream& os, const Table& table, Format format);

/// "%.17g" rendering used by the CSV writer.
std::string format_real(double value);

}  // namespace succoef::report
