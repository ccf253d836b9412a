#include <filesystem>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "json.hpp"
#include "jcnc/runner.hpp"

namespace jcnc {

namespace {

using nlohmann::json;

// Flattened CSV row; nullopt marks an empty field.
std::vector<std::optional<double>> flatten(const TimeSeriesRow& row) {
  std::vector<std::optional<double>> v{row.T, row.n_c, row.n_f, row.n_a};
  for (double x : row.field_residuals) v.emplace_back(x);
  for (double x : row.atom_residuals) v.emplace_back(x);
  for (double x : row.totals) v.emplace_back(x);
  v.push_back(row.total_inf);
  v.emplace_back(row.coh_a);
  v.emplace_back(row.coh_f);
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw OutputError("failed writing '" + path + "'");
}

}  // namespace

std::vector<std::string> csv_header(const ScenarioConfig& cfg) {
  std::vector<std::string> h{"T", "N_c", "N_f", "N_a"};
  for (int l = 2; l <= cfg.layers; ++l) h.push_back(fmt::format("N_f_res_{}", l));
  for (int l = 2; l <= cfg.layers; ++l) h.push_back(fmt::format("N_a_res_{}", l));
  for (int l = 1; l <= cfg.layers; ++l) h.push_back(fmt::format("N_tot_{}", l));
  h.insert(h.end(), {"N_tot_inf", "coh_a", "coh_f"});
  return h;
}

std::string format_number(double value) {
  // + 0.0 folds negative zero
  return fmt::format("{:.15g}", value + 0.0);
}

std::string to_csv(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg) {
  std::string out;
  const auto header = csv_header(cfg);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    const auto fields = flatten(row);
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      if (fields[i]) out += format_number(*fields[i]);
    }
    out += '\n';
  }
  return out;
}

std::string summary_json(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg,
                         double runtime_seconds) {
  const auto header = csv_header(cfg);
  json columns = json::object();
  for (std::size_t c = 1; c < header.size(); ++c) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    double t_lo = 0.0, t_hi = 0.0;
    bool any = false;
    for (const auto& row : rows) {
      const auto v = flatten(row)[c];
      if (!v) continue;
      any = true;
      if (*v < lo) lo = *v, t_lo = row.T;
      if (*v > hi) hi = *v, t_hi = row.T;
    }
    columns[header[c]] = any ? json{{"min", lo}, {"T_at_min", t_lo}, {"max", hi}, {"T_at_max", t_hi}}
                             : json(nullptr);
  }

  json doc;
  doc["config"] = json::parse(config_json(cfg));
  doc["rows"] = rows.size();
  doc["columns"] = columns;
  const std::string last_total = fmt::format("N_tot_{}", cfg.layers);
  if (!rows.empty()) {
    doc["min_total"] = {{"column", last_total},
                        {"value", columns[last_total]["min"]},
                        {"T", columns[last_total]["T_at_min"]}};
  }
  doc["runtime_seconds"] = runtime_seconds;
  return doc.dump(2) + "\n";
}

OutputPaths write_outputs(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg,
                          double runtime_seconds, const OracleComparison* comparison) {
  if (rows.empty()) throw OutputError("no rows to write for prefix '" + cfg.output_prefix + "'");
  OutputPaths paths{cfg.output_prefix + ".csv", cfg.output_prefix + ".summary.json", std::nullopt};
  // Render everything before touching the filesystem.
  const std::string csv = to_csv(rows, cfg);
  const std::string summary = summary_json(rows, cfg, runtime_seconds);
  write_file(paths.csv, csv);
  write_file(paths.summary, summary);
  if (comparison != nullptr) {
    paths.oracle = cfg.output_prefix + ".oracle.json";
    write_file(*paths.oracle, comparison->to_json());
  }
  return paths;
}

}  // namespace jcnc
