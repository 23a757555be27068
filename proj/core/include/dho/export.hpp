#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dho/harness.hpp"
#include "dho/reference_solver.hpp"
#include "dho/wavefunction.hpp"

namespace dho {

using Cell = std::variant<long, double, std::string, bool>;

// Metadata plus a rectangular record set.
struct DataTable {
  std::vector<std::pair<std::string, Cell>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };
Format parse_format(const std::string& name);

// CSV: metadata as one "# key=value,..." line, then the header row and records.
// JSON: {"metadata": {...}, "records": [{column: value}, ...]}.
void write_table(const DataTable& t, Format f, std::ostream& out);
// "-" or empty writes to stdout.
void write_table(const DataTable& t, Format f, const std::string& path);

std::string to_string(Normalization n);

DataTable wavefunction_table(const AsymptoticWavefunction& w);
DataTable convergence_table(const std::vector<ConvergenceRecord>& records, double x0);
DataTable mathieu_table(const MathieuQuery& q, MathieuMethod method, const MathieuResult& r);

}  // namespace dho
