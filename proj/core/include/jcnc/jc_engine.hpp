#pragma once

#include <complex>
#include <iosfwd>
#include <string_view>
#include <variant>

#include "jcnc/hilbert.hpp"

namespace jcnc {

// Field-first basis: composite index = n * 2 + m, with atomic level m = 0
// (ground) or 1 (excited).
inline constexpr std::string_view kFieldLabel = "f";
inline constexpr std::string_view kAtomLabel = "a";
inline constexpr int kGround = 0;
inline constexpr int kExcited = 1;

struct JCParams {
  int field_dim = 2;
  // Free frequency. Every reported quantity is computed in the interaction
  // picture, so this never enters the dynamics.
  double omega = 0.0;
};

struct VacuumFieldExcitedAtom {};
/// Field in |2>, atom in the ground state.
struct FockFieldGroundAtom {};
struct ThermalFieldExcitedAtom {
  double mean_photon = 0.0;
};
struct CoherentFieldExcitedAtom {
  std::complex<double> alpha;
};

using ScenarioCase = std::variant<VacuumFieldExcitedAtom, FockFieldGroundAtom,
                                  ThermalFieldExcitedAtom, CoherentFieldExcitedAtom>;

/// 'A'..'D'
char case_letter(const ScenarioCase& scenario);
int minimum_field_dim(const ScenarioCase& scenario);

ModeLayout jc_layout(int field_dim);
ModeLayout field_layout(int field_dim);
ModeLayout atom_layout();

/// sigma_+ a + sigma_- a^dagger on field (d) x atom (2), in units of the coupling.
ComplexMatrix interaction_hamiltonian(int field_dim);

/// N_f x I + I x |1_a><1_a|
ComplexMatrix excitation_number(int field_dim);

/// Exact propagator exp(-i T H) for the interaction Hamiltonian, built once
/// from its spectral decomposition. Immutable after construction.
class JCEvolver {
 public:
  explicit JCEvolver(int field_dim);

  int field_dim() const noexcept { return field_dim_; }
  const ModeLayout& layout() const noexcept { return layout_; }

  ComplexMatrix propagator(double T) const { return spectral_.propagator(T); }

  DensityOperator evolve(const DensityOperator& rho0, double T) const;
  StateVector evolve(const StateVector& psi0, double T) const;

 private:
  int field_dim_;
  ModeLayout layout_;
  HermitianEigensystem spectral_;
};

/// Evolves over a (f: d, a: 2) layout; d is read from the layout.
DensityOperator evolve(const DensityOperator& rho0, double T);

/// Closed-form rotation inside the doublet {|n-1, e>, |n, g>}, which couples
/// at rate sqrt(n):
///   |n-1, e>  ->  stay |n-1, e> + transfer |n, g>
///   |n, g>    ->  stay |n, g>   + transfer |n-1, e>
/// with stay = cos(sqrt(n) T) and transfer = -i sin(sqrt(n) T).
struct DoubletRotation {
  int excitation = 1;
  std::complex<double> stay;
  std::complex<double> transfer;
};

DoubletRotation sector_evolution(int excitation, double T, int field_dim);

DensityOperator initial_state(const ScenarioCase& scenario, int field_dim);

/// Geometric weights for n < d-1 with the top level left empty, renormalized.
DensityOperator truncated_thermal(double mean_photon, int field_dim);

/// Probability mass of the untruncated coherent state outside the kept levels.
double coherent_truncation_loss(std::complex<double> alpha, int field_dim);

inline constexpr double kCoherentLossWarning = 1e-3;

/// Poisson amplitudes for n < d-1, top level set to zero, renormalized.
/// Writes a warning to `warnings` (if non-null) when the dropped tail exceeds
/// kCoherentLossWarning.
StateVector truncated_coherent(std::complex<double> alpha, int field_dim,
                               std::ostream* warnings = nullptr);

struct ReducedStates {
  DensityOperator field;
  DensityOperator atom;
};

ReducedStates reduced_states(const DensityOperator& rho);

}  // namespace jcnc
