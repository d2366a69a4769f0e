#pragma once

#include <string>
#include <vector>

namespace sqz {

struct Column {
  std::string name;
  std::string unit;  // "-" for dimensionless
};

/// Column-typed table with unit-carrying headers. Numeric cells are
/// formatted once, with the shortest round-trip representation, so emitted
/// files are byte-stable across runs and thread counts.
class ResultTable {
 public:
  explicit ResultTable(std::vector<Column> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<std::string> cells);
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Column>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  /// "name[unit],name[unit],..."
  std::string header_line() const;
  void write_csv(const std::string& path) const;

  /// Shortest representation that parses back to the same double.
  static std::string format(double v);

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<std::string>> rows_;
};

struct CsvFile {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Parse a CSV written by ResultTable. Throws SchemaError on malformed
/// headers and std::runtime_error on unreadable files.
CsvFile read_csv(const std::string& path);

/// Index of a named column; SchemaError naming it when absent.
std::size_t column_index(const CsvFile& csv, const std::string& name);

/// Numeric view of one column; SchemaError (naming the column) on
/// unparseable cells.
std::vector<double> numeric_column(const CsvFile& csv, const std::string& name);

}  // namespace sqz
