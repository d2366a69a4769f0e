#include "sqz/table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sqz/errors.hpp"

namespace sqz {

void ResultTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("ResultTable::add_row: cell count does not match columns");
  rows_.push_back(std::move(cells));
}

std::string ResultTable::header_line() const {
  std::string line;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) line += ',';
    line += columns_[i].name + "[" + columns_[i].unit + "]";
  }
  return line;
}

void ResultTable::write_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  out << header_line() << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

std::string ResultTable::format(double v) {
  if (v == 0.0) return "0";  // collapse negative zero
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (const char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

CsvFile read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("<header>", "read_csv: empty file " + path);
  CsvFile csv;
  for (const auto& tok : split_csv_line(line)) {
    const auto open = tok.find('[');
    if (open == std::string::npos || tok.back() != ']')
      throw SchemaError(tok, "read_csv: header token '" + tok + "' is not name[unit]");
    csv.columns.push_back({tok.substr(0, open), tok.substr(open + 1, tok.size() - open - 2)});
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != csv.columns.size())
      throw SchemaError(csv.columns[std::min(cells.size(), csv.columns.size() - 1)].name,
                        "read_csv: row with " + std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(csv.columns.size()));
    csv.rows.push_back(std::move(cells));
  }
  return csv;
}

std::size_t column_index(const CsvFile& csv, const std::string& name) {
  for (std::size_t i = 0; i < csv.columns.size(); ++i)
    if (csv.columns[i].name == name) return i;
  throw SchemaError(name, "column '" + name + "' not found");
}

std::vector<double> numeric_column(const CsvFile& csv, const std::string& name) {
  const std::size_t idx = column_index(csv, name);
  std::vector<double> vals;
  vals.reserve(csv.rows.size());
  for (const auto& row : csv.rows) {
    const std::string& cell = row[idx];
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
      throw SchemaError(name, "column '" + name + "': cell '" + cell + "' is not numeric");
    vals.push_back(v);
  }
  return vals;
}

}  // namespace sqz
