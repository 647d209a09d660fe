#include "sbinet/csv.hpp"

#include <cassert>

#include "sbinet/error.hpp"

namespace sbinet {

std::optional<std::size_t> DataTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

void DataTable::append_column(std::string name, std::vector<std::string> values) {
  assert(values.size() == rows.size());
  header.push_back(std::move(name));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(std::move(values[i]));
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Record {
  std::vector<std::string> cells;
  std::size_t line = 0;
};

class CsvReader {
 public:
  explicit CsvReader(std::string_view text) : text_(text) {}

  // Returns false at end of input. Blank lines yield no record.
  bool next(Record& record) {
    while (pos_ < text_.size()) {
      record.cells.clear();
      record.line = line_;
      if (read_record(record.cells)) return true;
    }
    return false;
  }

 private:
  bool read_record(std::vector<std::string>& cells) {
    while (pos_ < text_.size() && is_blank(text_[pos_])) ++pos_;
    if (pos_ >= text_.size() || text_[pos_] == '\n') {
      if (pos_ < text_.size()) ++pos_;
      ++line_;
      return false;
    }
    while (true) {
      cells.push_back(read_cell());
      if (pos_ >= text_.size()) return true;
      char c = text_[pos_++];
      if (c == '\n') {
        ++line_;
        return true;
      }
      // c == ','
    }
  }

  std::string read_cell() {
    std::string cell;
    while (pos_ < text_.size() && is_blank(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      std::size_t open_line = line_;
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) {
          throw Error(ErrorKind::UnterminatedQuote,
                      "quoted cell opened on line " + std::to_string(open_line) + " never closes");
        }
        char c = text_[pos_++];
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            cell += '"';
            ++pos_;
            continue;
          }
          break;
        }
        if (c == '\n') ++line_;
        cell += c;
      }
      // Anything between the closing quote and the separator is kept verbatim.
      std::string tail;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n') tail += text_[pos_++];
      while (!tail.empty() && is_blank(tail.back())) tail.pop_back();
      return cell + tail;
    }
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '\n') cell += text_[pos_++];
    while (!cell.empty() && is_blank(cell.back())) cell.pop_back();
    return cell;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool needs_quotes(const std::string& cell) {
  if (cell.empty()) return false;
  if (is_blank(cell.front()) || is_blank(cell.back())) return true;
  return cell.find_first_of(",\"\n\r") != std::string::npos;
}

void append_cell(std::string& out, const std::string& cell) {
  if (!needs_quotes(cell)) {
    out += cell;
    return;
  }
  out += '"';
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

DataTable parse_csv(std::string_view text) {
  DataTable table;
  CsvReader reader(text);
  Record record;
  if (!reader.next(record)) return table;
  table.header = std::move(record.cells);
  while (reader.next(record)) {
    if (record.cells.size() != table.header.size()) {
      throw RowError(ErrorKind::RaggedRow,
                     "expected " + std::to_string(table.header.size()) + " cells, found " +
                         std::to_string(record.cells.size()) + " on line " +
                         std::to_string(record.line),
                     table.rows.size() + 1);
    }
    table.rows.push_back(std::move(record.cells));
  }
  return table;
}

std::string write_csv(const DataTable& table) {
  std::string out;
  auto write_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      append_cell(out, row[i]);
    }
    out += '\n';
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  return out;
}

}  // namespace sbinet
