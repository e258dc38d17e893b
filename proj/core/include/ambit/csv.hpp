#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambit/data.hpp"

namespace ambit {

/// A parsed CSV file: header names plus data rows of raw cells.
/// RFC-4180-style quoting is honored (quoted fields, doubled quotes, CRLF,
/// embedded newlines inside quotes).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws with the available names otherwise.
  std::size_t column_index(const std::string& name) const;

  /// File row number of data row `i` (the header is row 1).
  static std::size_t row_number(std::size_t i) { return i + 2; }
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv_file(const std::string& path);

struct MissingCsvOptions {
  std::string outcome_column;
  OutcomeRange range{0.0, 1.0};
  /// Cells equal to any of these tokens are missing; the empty cell always is.
  std::vector<std::string> na_tokens{"NA"};
};

/// Reads a missing-outcome sample from CSV. Out-of-range or unparseable
/// outcomes fail with the offending row number.
MissingDataSet parse_missing_csv(const std::string& path,
                                 const MissingCsvOptions& options);

struct TreatmentCsvOptions {
  std::string treatment_column;
  std::string outcome_column;
  std::optional<std::string> group_column;
  OutcomeRange range{0.0, 1.0};
  /// Feasible treatments; empty means infer from the data in order of first
  /// appearance.
  std::vector<std::string> treatments;
};

/// Reads a treatment sample from CSV. Realized outcomes are required: a
/// missing outcome cell is an error, not a missing record.
TreatmentDataSet parse_treatment_csv(const std::string& path,
                                     const TreatmentCsvOptions& options);

}  // namespace ambit
