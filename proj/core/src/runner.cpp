#include <sstream>

#include "jcnc/nonclassicality.hpp"
#include "jcnc/runner.hpp"

namespace jcnc {

std::vector<double> time_grid(const ScenarioConfig& cfg) {
  std::vector<double> grid(static_cast<std::size_t>(cfg.n_points));
  const double step = cfg.t_max / static_cast<double>(cfg.n_points - 1);
  for (int k = 0; k < cfg.n_points; ++k) grid[static_cast<std::size_t>(k)] = step * k;
  grid.back() = cfg.t_max;
  return grid;
}

TimeSeriesRow evaluate_row(const ScenarioConfig& cfg, const JCEvolver& evolver,
                           const DensityOperator& rho0, double T) {
  const DensityOperator rho = evolver.evolve(rho0, T);
  const DensityDiagnostics diag = validate_density(rho, kEvolutionValidationTolerance);
  if (!diag.valid()) {
    std::ostringstream msg;
    msg << "evolved state at T=" << T << " failed validation: hermiticity deviation "
        << diag.hermiticity_deviation << ", trace deviation " << diag.trace_deviation
        << ", min eigenvalue " << diag.min_eigenvalue;
    throw NumericalValidationError(msg.str());
  }

  const ReducedStates reduced = reduced_states(rho);
  TimeSeriesRow row;
  row.T = T;
  row.n_c = negativity(rho, kAtomLabel);

  const CascadeReport field = cascade(reduced.field, cfg.layers, ModeKind::field);
  const CascadeReport atom = cascade(reduced.atom, cfg.layers, ModeKind::atom);
  row.n_f = field.layer_sums.front();
  row.n_a = atom.layer_sums.front();
  row.field_residuals.assign(field.layer_sums.begin() + 1, field.layer_sums.end());
  row.atom_residuals.assign(atom.layer_sums.begin() + 1, atom.layer_sums.end());

  TotalsRecord totals = summarize_totals(row.n_c, field, atom, cfg.case_id == CaseId::A);
  row.totals = std::move(totals.totals);
  row.total_inf = totals.extrapolated;

  row.coh_a = l1_coherence(reduced.atom);
  row.coh_f = l1_coherence(reduced.field);
  return row;
}

std::vector<TimeSeriesRow> run_scenario(const ScenarioConfig& cfg) {
  const JCEvolver evolver(cfg.field_dim);
  const DensityOperator rho0 = initial_state(cfg.scenario(), cfg.field_dim);

  std::vector<TimeSeriesRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.n_points));
  for (double T : time_grid(cfg)) rows.push_back(evaluate_row(cfg, evolver, rho0, T));
  return rows;
}

}  // namespace jcnc
