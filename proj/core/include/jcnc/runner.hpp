#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jcnc/jc_engine.hpp"

namespace jcnc {

enum class CaseId { A, B, C, D };

char to_char(CaseId id);

/// One scenario run: initial state, truncation, time grid and cascade depth.
struct ScenarioConfig {
  CaseId case_id = CaseId::A;
  int field_dim = 2;
  std::optional<double> mean_photon;  // case C only
  std::optional<double> alpha;        // case D only
  double t_max = 0.0;
  int n_points = 401;
  int layers = 2;
  bool oracle_compare = false;
  double oracle_case_b_frequency = 0.0;
  std::string output_prefix;

  ScenarioCase scenario() const;
};

/// Parses a flat JSON object into a validated config with defaults filled.
/// Throws ConfigError naming the offending key (or the line/column of a
/// syntax error). Unknown keys are rejected.
ScenarioConfig parse_config(std::string_view json_text);

/// Grid points t_max * k / (n_points - 1), k = 0..n_points-1.
std::vector<double> time_grid(const ScenarioConfig& cfg);

struct TimeSeriesRow {
  double T = 0.0;
  double n_c = 0.0;
  double n_f = 0.0;
  double n_a = 0.0;
  std::vector<double> field_residuals;  // layer sums for layers 2..L
  std::vector<double> atom_residuals;
  std::vector<double> totals;  // N_tot^(1..L)
  std::optional<double> total_inf;
  double coh_a = 0.0;
  double coh_f = 0.0;
};

inline constexpr double kEvolutionValidationTolerance = 1e-10;

/// Evaluates every grid point. Throws NumericalValidationError if an evolved
/// state fails validate_density at kEvolutionValidationTolerance.
std::vector<TimeSeriesRow> run_scenario(const ScenarioConfig& cfg);

/// Row evaluation at one time, reusing a prebuilt evolver.
TimeSeriesRow evaluate_row(const ScenarioConfig& cfg, const JCEvolver& evolver,
                           const DensityOperator& rho0, double T);

std::vector<std::string> csv_header(const ScenarioConfig& cfg);
std::string format_number(double value);
std::string to_csv(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg);
std::string summary_json(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg,
                         double runtime_seconds);
std::string config_json(const ScenarioConfig& cfg);

struct ComparisonEntry {
  std::string quantity;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool flagged = false;
  std::string note;
};

struct OracleComparison {
  char case_letter = 'A';
  std::vector<ComparisonEntry> entries;
  std::vector<std::string> engine_only;

  bool any_flagged() const noexcept;
  const ComparisonEntry* find(std::string_view quantity) const noexcept;
  std::string to_json() const;
};

/// Max-absolute-error of engine output against the closed forms over the
/// grid. Reduced-matrix comparisons re-evolve the scenario on the same grid.
OracleComparison compare_with_oracle(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg);

struct OutputPaths {
  std::string csv;
  std::string summary;
  std::optional<std::string> oracle;
};

/// Writes <prefix>.csv, <prefix>.summary.json and, when `comparison` is
/// given, <prefix>.oracle.json. Throws OutputError with the failing path.
OutputPaths write_outputs(const std::vector<TimeSeriesRow>& rows, const ScenarioConfig& cfg,
                          double runtime_seconds, const OracleComparison* comparison = nullptr);

}  // namespace jcnc
