#include "econamp/cli/csv.hpp"

#include <fstream>
#include <istream>
#include <unordered_map>

#include "econamp/cli/errors.hpp"
#include "econamp/cli/format.hpp"

namespace econamp::cli {
namespace {

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ParseError(source, 1, "missing column '" + name + "'");
}

bool CsvTable::has_column(const std::string& name) const {
  for (const auto& h : header)
    if (h == name) return true;
  return false;
}

CsvTable parse_csv(std::istream& in, const std::string& source) {
  CsvTable table;
  table.source = source;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (trim(line).empty()) continue;
    if (line.find('"') != std::string_view::npos)
      throw ParseError(source, line_no, "quoted fields are not supported");

    auto cells = split(line);
    if (!have_header) {
      std::unordered_map<std::string, std::size_t> seen;
      for (const auto& name : cells) {
        if (name.empty()) throw ParseError(source, line_no, "empty column name in header");
        if (!seen.emplace(name, 0).second)
          throw ParseError(source, line_no, "duplicate column '" + name + "'");
      }
      table.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.header.size())
      throw ParseError(source, line_no,
                       "expected " + std::to_string(table.header.size()) + " fields, found " +
                           std::to_string(cells.size()));
    table.rows.push_back({line_no, std::move(cells)});
  }
  if (!have_header) throw ParseError(source, 0, "file is empty (no header row)");
  return table;
}

CsvTable load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open CSV file '" + path.string() + "'");
  return parse_csv(in, path.string());
}

double numeric_cell(const CsvTable& table, const CsvTable::Row& row, std::size_t col) {
  const std::string& text = row.cells.at(col);
  if (text.empty())
    throw ParseError(table.source, row.line, "empty value in column '" + table.header[col] + "'");
  const auto value = parse_number(text);
  if (!value)
    throw ParseError(table.source, row.line,
                     "column '" + table.header[col] + "': '" + text + "' is not a number");
  return *value;
}

EconSeries series_from_csv(const CsvTable& table) {
  const std::size_t c_period = table.column("period");
  const std::size_t c_inv = table.column("investments");
  const std::size_t c_exp = table.column("expenses");
  const std::size_t c_inc = table.column("incomes");
  const bool has_quantity = table.has_column("quantity_out");
  const std::size_t c_qty = has_quantity ? table.column("quantity_out") : 0;

  if (table.rows.empty()) throw ParseError(table.source, 0, "no data rows");

  EconSeries series;
  std::unordered_map<std::string, std::size_t> label_lines;
  for (const auto& row : table.rows) {
    EconPeriod p;
    p.label = row.cells[c_period];
    if (p.label.empty()) throw ParseError(table.source, row.line, "empty period label");
    if (auto [it, fresh] = label_lines.emplace(p.label, row.line); !fresh)
      throw ParseError(table.source, row.line,
                       "period '" + p.label + "' already used on line " + std::to_string(it->second));

    auto money = [&](std::size_t col) {
      const double v = numeric_cell(table, row, col);
      if (v < 0.0)
        throw ParseError(table.source, row.line, "column '" + table.header[col] + "' must be >= 0");
      return v;
    };
    p.investments = money(c_inv);
    p.expenses = money(c_exp);
    p.incomes = money(c_inc);
    if (has_quantity && !row.cells[c_qty].empty()) p.quantity_out = money(c_qty);
    series.periods.push_back(std::move(p));
  }
  return series;
}

}  // namespace econamp::cli
