#include "jcnc/jc_engine.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace jcnc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_field_dim(int d, int minimum, std::string_view what) {
  if (d < minimum) {
    throw InvalidDimension(std::string(what) + " needs field dimension >= " +
                           std::to_string(minimum) + ", got " + std::to_string(d));
  }
}

void require_jc_layout(const ModeLayout& layout) {
  if (layout.size() != 2 || layout[0].label != kFieldLabel || layout[1].label != kAtomLabel ||
      layout[1].dim != 2) {
    throw LayoutMismatch("expected layout (f:d, a:2), got " + to_string(layout));
  }
}

DensityOperator excited_atom() {
  return DensityOperator::pure(StateVector::basis(atom_layout(), {kExcited}));
}

}  // namespace

char case_letter(const ScenarioCase& scenario) {
  return std::visit(Overloaded{
                        [](const VacuumFieldExcitedAtom&) { return 'A'; },
                        [](const FockFieldGroundAtom&) { return 'B'; },
                        [](const ThermalFieldExcitedAtom&) { return 'C'; },
                        [](const CoherentFieldExcitedAtom&) { return 'D'; },
                    },
                    scenario);
}

int minimum_field_dim(const ScenarioCase& scenario) {
  return std::holds_alternative<VacuumFieldExcitedAtom>(scenario) ? 2 : 3;
}

ModeLayout jc_layout(int field_dim) {
  return ModeLayout{{std::string(kFieldLabel), field_dim}, {std::string(kAtomLabel), 2}};
}

ModeLayout field_layout(int field_dim) { return ModeLayout{{std::string(kFieldLabel), field_dim}}; }

ModeLayout atom_layout() { return ModeLayout{{std::string(kAtomLabel), 2}}; }

ComplexMatrix interaction_hamiltonian(int field_dim) {
  require_field_dim(field_dim, 2, "interaction_hamiltonian");
  ComplexMatrix sigma_plus = ComplexMatrix::Zero(2, 2);
  sigma_plus(kExcited, kGround) = 1.0;
  const ComplexMatrix a = annihilation(field_dim);
  return kron(a, sigma_plus) + kron(ComplexMatrix(a.adjoint()), ComplexMatrix(sigma_plus.adjoint()));
}

ComplexMatrix excitation_number(int field_dim) {
  ComplexMatrix excited = ComplexMatrix::Zero(2, 2);
  excited(kExcited, kExcited) = 1.0;
  return kron(number_operator(field_dim), ComplexMatrix::Identity(2, 2)) +
         kron(ComplexMatrix::Identity(field_dim, field_dim), excited);
}

JCEvolver::JCEvolver(int field_dim)
    : field_dim_(field_dim),
      layout_(jc_layout(field_dim)),
      spectral_(interaction_hamiltonian(field_dim)) {}

DensityOperator JCEvolver::evolve(const DensityOperator& rho0, double T) const {
  if (rho0.layout() != layout_) {
    throw LayoutMismatch("evolver built for " + to_string(layout_) + ", state has " +
                         to_string(rho0.layout()));
  }
  const ComplexMatrix u = propagator(T);
  ComplexMatrix rho = u * rho0.matrix() * u.adjoint();
  return DensityOperator(layout_, std::move(rho));
}

StateVector JCEvolver::evolve(const StateVector& psi0, double T) const {
  if (psi0.layout() != layout_) {
    throw LayoutMismatch("evolver built for " + to_string(layout_) + ", state has " +
                         to_string(psi0.layout()));
  }
  ComplexVector psi = propagator(T) * psi0.amplitudes();
  psi.normalize();
  return StateVector(layout_, std::move(psi));
}

DensityOperator evolve(const DensityOperator& rho0, double T) {
  require_jc_layout(rho0.layout());
  return JCEvolver(rho0.layout()[0].dim).evolve(rho0, T);
}

DoubletRotation sector_evolution(int excitation, double T, int field_dim) {
  if (excitation < 1 || excitation > field_dim - 1) {
    throw InvalidArgument("excitation " + std::to_string(excitation) + " outside [1, " +
                          std::to_string(field_dim - 1) + "]");
  }
  const double angle = std::sqrt(static_cast<double>(excitation)) * T;
  return DoubletRotation{excitation, {std::cos(angle), 0.0}, {0.0, -std::sin(angle)}};
}

DensityOperator truncated_thermal(double mean_photon, int field_dim) {
  if (!(mean_photon > 0.0)) {
    throw InvalidArgument("mean photon number must be positive, got " + std::to_string(mean_photon));
  }
  require_field_dim(field_dim, 2, "truncated_thermal");
  ComplexMatrix rho = ComplexMatrix::Zero(field_dim, field_dim);
  const double ratio = mean_photon / (mean_photon + 1.0);
  double weight = 1.0 / (mean_photon + 1.0);
  double total = 0.0;
  for (int n = 0; n < field_dim - 1; ++n) {
    rho(n, n) = weight;
    total += weight;
    weight *= ratio;
  }
  rho /= total;
  return DensityOperator(field_layout(field_dim), std::move(rho));
}

double coherent_truncation_loss(std::complex<double> alpha, int field_dim) {
  const double mean = std::norm(alpha);
  double term = std::exp(-mean);
  double kept = 0.0;
  for (int n = 0; n < field_dim - 1; ++n) {
    kept += term;
    term *= mean / (n + 1);
  }
  return std::max(0.0, 1.0 - kept);
}

StateVector truncated_coherent(std::complex<double> alpha, int field_dim, std::ostream* warnings) {
  require_field_dim(field_dim, 2, "truncated_coherent");
  ComplexVector amps = ComplexVector::Zero(field_dim);
  std::complex<double> c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n < field_dim - 1; ++n) {
    amps(n) = c;
    c *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  const double loss = coherent_truncation_loss(alpha, field_dim);
  if (warnings != nullptr && loss > kCoherentLossWarning) {
    *warnings << "warning: coherent state alpha=" << alpha << " truncated at d=" << field_dim
              << " drops " << loss << " of its norm\n";
  }
  amps.normalize();
  return StateVector(field_layout(field_dim), std::move(amps));
}

DensityOperator initial_state(const ScenarioCase& scenario, int field_dim) {
  require_field_dim(field_dim, minimum_field_dim(scenario),
                    std::string("case ") + case_letter(scenario));
  return std::visit(
      Overloaded{
          [&](const VacuumFieldExcitedAtom&) {
            return DensityOperator::pure(StateVector::basis(jc_layout(field_dim), {0, kExcited}));
          },
          [&](const FockFieldGroundAtom&) {
            return DensityOperator::pure(StateVector::basis(jc_layout(field_dim), {2, kGround}));
          },
          [&](const ThermalFieldExcitedAtom& c) {
            return tensor(truncated_thermal(c.mean_photon, field_dim), excited_atom());
          },
          [&](const CoherentFieldExcitedAtom& c) {
            return tensor(DensityOperator::pure(truncated_coherent(c.alpha, field_dim, nullptr)),
                          excited_atom());
          },
      },
      scenario);
}

ReducedStates reduced_states(const DensityOperator& rho) {
  require_jc_layout(rho.layout());
  return ReducedStates{partial_trace(rho, {std::string(kFieldLabel)}),
                       partial_trace(rho, {std::string(kAtomLabel)})};
}

}  // namespace jcnc
