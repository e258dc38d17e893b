#include "ambit/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ambit {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out;
}

double parse_cell_double(const std::string& cell, const std::string& path,
                         std::size_t row, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(path + ": row " + std::to_string(row) +
                                ": cannot parse '" + cell + "' in column '" +
                                column + "' as a number");
  }
  return value;
}

void check_range(double value, const OutcomeRange& range,
                 const std::string& path, std::size_t row) {
  if (!range.contains(value)) {
    std::ostringstream msg;
    msg << path << ": row " << row << ": outcome " << value
        << " outside range [" << range.min << ", " << range.max << "]";
    throw std::invalid_argument(msg.str());
  }
}

bool is_missing(const std::string& cell,
                const std::vector<std::string>& na_tokens) {
  if (cell.empty()) return true;
  return std::find(na_tokens.begin(), na_tokens.end(), cell) !=
         na_tokens.end();
}

}  // namespace

std::size_t CsvTable::column_index(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw std::invalid_argument("no column named '" + name +
                                "' (available: " + join(header) + ")");
  }
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
        break;
    }
  }
  if (in_quotes) {
    throw std::invalid_argument("unterminated quoted field at end of input");
  }
  if (field_started || !field.empty() || !record.empty()) {
    end_record();
  }

  if (records.empty()) {
    throw std::invalid_argument("CSV input is empty (header row required)");
  }
  CsvTable table;
  table.header = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != table.header.size()) {
      throw std::invalid_argument(
          "row " + std::to_string(i + 1) + " has " +
          std::to_string(records[i].size()) + " fields, header has " +
          std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_csv(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

MissingDataSet parse_missing_csv(const std::string& path,
                                 const MissingCsvOptions& options) {
  const CsvTable table = read_csv_file(path);
  const std::size_t col = table.column_index(options.outcome_column);
  std::vector<MissingDataRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::string& cell = table.rows[i][col];
    if (is_missing(cell, options.na_tokens)) {
      records.push_back(MissingDataRecord{std::nullopt});
      continue;
    }
    const std::size_t row = CsvTable::row_number(i);
    const double value =
        parse_cell_double(cell, path, row, options.outcome_column);
    check_range(value, options.range, path, row);
    records.push_back(MissingDataRecord{value});
  }
  return MissingDataSet(std::move(records), options.range);
}

TreatmentDataSet parse_treatment_csv(const std::string& path,
                                     const TreatmentCsvOptions& options) {
  const CsvTable table = read_csv_file(path);
  const std::size_t treatment_col =
      table.column_index(options.treatment_column);
  const std::size_t outcome_col = table.column_index(options.outcome_column);
  std::optional<std::size_t> group_col;
  if (options.group_column) {
    group_col = table.column_index(*options.group_column);
  }
  std::vector<TreatmentRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::size_t row = CsvTable::row_number(i);
    const std::string& outcome_cell = table.rows[i][outcome_col];
    if (outcome_cell.empty()) {
      throw std::invalid_argument(
          path + ": row " + std::to_string(row) +
          ": treatment records require a realized outcome");
    }
    TreatmentRecord record;
    record.treatment = table.rows[i][treatment_col];
    if (record.treatment.empty()) {
      throw std::invalid_argument(path + ": row " + std::to_string(row) +
                                  ": empty treatment identifier");
    }
    record.outcome =
        parse_cell_double(outcome_cell, path, row, options.outcome_column);
    check_range(record.outcome, options.range, path, row);
    if (group_col) {
      record.group = table.rows[i][*group_col];
    }
    records.push_back(std::move(record));
  }
  std::vector<std::string> treatments =
      options.treatments.empty() ? TreatmentDataSet::infer_treatments(records)
                                 : options.treatments;
  return TreatmentDataSet(std::move(records), std::move(treatments),
                          options.range);
}

}  // namespace ambit
