// jcnc: run one Jaynes-Cummings nonclassicality scenario and write
// <prefix>.csv, <prefix>.summary.json and optionally <prefix>.oracle.json.
//
// Exit codes: 0 success, 2 config error, 3 numerical validation failure,
// 4 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "jcnc/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct Overrides {
  std::optional<std::string> case_id;
  std::optional<int> field_dim;
  std::optional<double> mean_photon;
  std::optional<double> alpha;
  std::optional<double> t_max;
  std::optional<int> n_points;
  std::optional<int> layers;
  bool oracle_compare = false;
  std::optional<double> oracle_case_b_frequency;
  std::optional<std::string> output_prefix;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jcnc::ConfigError("", "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Flags override file values key by key; the merged document goes through
// the same validation as a config file.
std::string merge(const std::optional<std::string>& config_path, const Overrides& o) {
  nlohmann::json doc = nlohmann::json::object();
  if (config_path) {
    try {
      doc = nlohmann::json::parse(read_file(*config_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw jcnc::ConfigError("", "malformed configuration in '" + *config_path + "': " + e.what());
    }
    if (!doc.is_object()) throw jcnc::ConfigError("", "configuration must be a JSON object");
  }
  if (o.case_id) doc["case"] = *o.case_id;
  if (o.field_dim) doc["field_dim"] = *o.field_dim;
  if (o.mean_photon) doc["mean_photon"] = *o.mean_photon;
  if (o.alpha) doc["alpha"] = *o.alpha;
  if (o.t_max) doc["t_max"] = *o.t_max;
  if (o.n_points) doc["n_points"] = *o.n_points;
  if (o.layers) doc["layers"] = *o.layers;
  if (o.oracle_compare) doc["oracle_compare"] = true;
  if (o.oracle_case_b_frequency) doc["oracle_case_b_frequency"] = *o.oracle_case_b_frequency;
  if (o.output_prefix) doc["output_prefix"] = *o.output_prefix;
  return doc.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jaynes-Cummings negativity, entanglement potential and beam-splitter cascade runner"};

  std::optional<std::string> config_path;
  Overrides o;
  bool quiet = false;

  app.add_option("-c,--config", config_path, "JSON scenario file")->check(CLI::ExistingFile);
  app.add_option("--case", o.case_id, "Initial state: A (vacuum, excited), B (|2>, ground), "
                                      "C (thermal, excited), D (coherent, excited)");
  app.add_option("--field-dim", o.field_dim, "Fock truncation d");
  app.add_option("--mean-photon", o.mean_photon, "Thermal mean photon number (case C)");
  app.add_option("--alpha", o.alpha, "Coherent amplitude (case D)");
  app.add_option("--t-max", o.t_max, "End of the time grid T = lambda t");
  app.add_option("--n-points", o.n_points, "Number of grid points");
  app.add_option("--layers", o.layers, "Beam-splitter cascade depth");
  app.add_flag("--oracle-compare", o.oracle_compare, "Also write <prefix>.oracle.json");
  app.add_option("--oracle-case-b-frequency", o.oracle_case_b_frequency,
                 "Doublet rate used by the case B closed form");
  app.add_option("-o,--output-prefix", o.output_prefix, "Output path prefix");
  app.add_flag("-q,--quiet", quiet, "Suppress the run summary on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  jcnc::ScenarioConfig cfg;
  try {
    cfg = jcnc::parse_config(merge(config_path, o));
  } catch (const jcnc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (cfg.case_id == jcnc::CaseId::D) {
    const double loss = jcnc::coherent_truncation_loss({*cfg.alpha, 0.0}, cfg.field_dim);
    if (loss > jcnc::kCoherentLossWarning) {
      std::cerr << "warning: coherent truncation at field_dim=" << cfg.field_dim << " drops " << loss
                << " of the norm\n";
    }
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = jcnc::run_scenario(cfg);
    std::optional<jcnc::OracleComparison> comparison;
    if (cfg.oracle_compare) comparison = jcnc::compare_with_oracle(rows, cfg);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const auto paths = jcnc::write_outputs(rows, cfg, elapsed, comparison ? &*comparison : nullptr);
    if (!quiet) {
      std::cout << "case " << jcnc::to_char(cfg.case_id) << ": " << rows.size() << " rows in " << elapsed
                << " s\n  " << paths.csv << "\n  " << paths.summary << "\n";
      if (paths.oracle) {
        std::cout << "  " << *paths.oracle << "\n";
        for (const auto& e : comparison->entries) {
          std::cout << "    " << e.quantity << " max |err| = " << e.max_abs_error
                    << (e.flagged ? "  [FLAGGED]" : "") << "\n";
        }
      }
    }
  } catch (const jcnc::NumericalValidationError& e) {
    std::cerr << "numerical validation failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const jcnc::OutputError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const jcnc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
