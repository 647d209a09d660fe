#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sbinet {

/// A rectangular table of string cells. Every row has exactly
/// `col_count()` cells.
struct DataTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t row_count() const noexcept { return rows.size(); }
  std::size_t col_count() const noexcept { return header.size(); }
  std::optional<std::size_t> column_index(std::string_view name) const;

  /// Appends a column; `values` must hold one cell per row.
  void append_column(std::string name, std::vector<std::string> values);
};

/// Comma-separated records with optional double-quote quoting (`""` escapes
/// a quote; commas and newlines are literal inside quotes). Whitespace
/// outside quotes is trimmed. The first record is the header; blank lines
/// are skipped.
DataTable parse_csv(std::string_view text);

/// Quotes a cell only when it contains a comma, quote, line break, or
/// leading/trailing whitespace.
std::string write_csv(const DataTable& table);

}  // namespace sbinet
