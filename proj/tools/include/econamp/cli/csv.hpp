#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "econamp/econmap.hpp"

namespace econamp::cli {

/// Header plus rows of raw cells. Comma separated, no quoting, '.' decimal
/// point. Blank lines are skipped.
struct CsvTable {
  std::string source;
  std::vector<std::string> header;
  struct Row {
    std::size_t line = 0;
    std::vector<std::string> cells;
  };
  std::vector<Row> rows;

  /// Column index, or ParseError naming the missing column.
  std::size_t column(const std::string& name) const;
  bool has_column(const std::string& name) const;
};

CsvTable parse_csv(std::istream& in, const std::string& source = "<csv>");
CsvTable load_csv(const std::filesystem::path& path);

/// Numeric cell; ParseError with the row's line on empty or malformed input.
double numeric_cell(const CsvTable& table, const CsvTable::Row& row, std::size_t col);

/// Reads the economic columns period, investments, expenses, incomes and the
/// optional quantity_out. An empty quantity_out cell means "not recorded".
EconSeries series_from_csv(const CsvTable& table);

}  // namespace econamp::cli
