#include "dho/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "json.hpp"

#include "dho/errors.hpp"

namespace dho {

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return fmt_double(v);
        else if constexpr (std::is_same_v<T, long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

nlohmann::json json_cell(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        // JSON has no NaN; missing fits become null.
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidInput("unknown format '" + name + "' (csv or json)");
}

void write_table(const DataTable& t, Format f, std::ostream& out) {
  if (f == Format::Csv) {
    if (!t.metadata.empty()) {
      out << "#";
      for (size_t i = 0; i < t.metadata.size(); ++i)
        out << (i ? "," : " ") << t.metadata[i].first << "=" << csv_cell(t.metadata[i].second);
      out << "\n";
    }
    for (size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
    return;
  }
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.metadata) doc["metadata"][k] = json_cell(v);
  doc["records"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json rec;
    for (size_t i = 0; i < row.size() && i < t.columns.size(); ++i) rec[t.columns[i]] = json_cell(row[i]);
    doc["records"].push_back(std::move(rec));
  }
  out << doc.dump(2) << "\n";
}

void write_table(const DataTable& t, Format f, const std::string& path) {
  if (path.empty() || path == "-") {
    write_table(t, f, std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot open '" + path + "' for writing");
  write_table(t, f, file);
  if (!file) throw NumericalFailure("write to '" + path + "' failed");
}

std::string to_string(Normalization n) {
  return n == Normalization::UnitEuclidean ? "euclidean" : "lowest";
}

DataTable wavefunction_table(const AsymptoticWavefunction& w) {
  DataTable t;
  t.metadata = {{"n", w.n},         {"m", w.m},   {"omega", w.omega},
                {"x0", w.x0},       {"j0", w.j0}, {"normalization", to_string(w.normalization)}};
  t.columns = {"j", "x", "psi"};
  for (long j = -w.j0; j <= w.j0; ++j) t.rows.push_back({j, w.x(j), w.at(j)});
  return t;
}

DataTable convergence_table(const std::vector<ConvergenceRecord>& records, double x0) {
  DataTable t;
  t.metadata = {{"x0", x0}, {"records", static_cast<long>(records.size())}};
  t.columns = {"n", "m", "omega", "norm_error", "censored", "fitted_slope", "prefactor", "model_prefactor"};
  for (const auto& r : records)
    t.rows.push_back({r.n, r.m, r.omega, r.norm_error, r.censored, r.fitted_slope, r.prefactor,
                      model_prefactor(r.n, r.m)});
  return t;
}

DataTable mathieu_table(const MathieuQuery& q, MathieuMethod method, const MathieuResult& r) {
  DataTable t;
  t.metadata = {{"method", to_string(method)}, {"series_order", q.series_order}};
  t.columns = {"q", "nu", "family", "order", "a", "method", "n", "x0", "omega", "lambda"};
  t.rows.push_back({q.q, 2 * r.x0, to_string(q.family), q.order, r.value, to_string(method), r.state, r.x0,
                    r.omega, r.lambda});
  return t;
}

}  // namespace dho
