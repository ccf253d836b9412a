#include <cmath>
#include <numbers>
#include <sstream>

#include "jcnc/jc_engine.hpp"
#include "jcnc/oracle.hpp"
#include "test_support.hpp"

namespace jcnc {
namespace {

using std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

Index idx(int n, int m) { return 2 * n + m; }

TEST(InteractionHamiltonian, SingleExcitationBlock) {
  const ComplexMatrix h = interaction_hamiltonian(2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(idx(1, kGround), idx(0, kExcited)) = 1.0;
  expected(idx(0, kExcited), idx(1, kGround)) = 1.0;
  EXPECT_MATRIX_NEAR(h, expected, 0.0);
  EXPECT_THROW(interaction_hamiltonian(1), InvalidDimension);
}

TEST(InteractionHamiltonian, MatrixElementGrowsAsSqrtN) {
  const ComplexMatrix h = interaction_hamiltonian(3);
  EXPECT_NEAR(std::abs(h(idx(1, kExcited), idx(2, kGround)) - kSqrt2), 0.0, 1e-15);
  EXPECT_MATRIX_NEAR(h, ComplexMatrix(h.adjoint()), 0.0);
}

TEST(InteractionHamiltonian, ConservesExcitationNumber) {
  for (int d = 2; d <= 6; ++d) {
    const ComplexMatrix h = interaction_hamiltonian(d);
    const ComplexMatrix n = excitation_number(d);
    EXPECT_MATRIX_NEAR(ComplexMatrix(h * n - n * h), ComplexMatrix::Zero(2 * d, 2 * d), 1e-14);
  }
}

TEST(Evolve, VacuumExcitedFollowsRabiKet) {
  const DensityOperator rho0 = initial_state(VacuumFieldExcitedAtom{}, 2);
  for (double T : {0.0, 0.2, pi / 4, 1.0, pi / 2, 2.5, 5.9}) {
    ComplexVector psi = ComplexVector::Zero(4);
    psi(idx(0, kExcited)) = std::cos(T);
    psi(idx(1, kGround)) = Complex(0.0, -std::sin(T));
    EXPECT_MATRIX_NEAR(evolve(rho0, T).matrix(), ComplexMatrix(psi * psi.adjoint()), 1e-14) << "T=" << T;
  }
}

TEST(Evolve, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(1);
  const DensityOperator rho = testing::random_density(jc_layout(4), rng);
  EXPECT_MATRIX_NEAR(evolve(rho, 0.0).matrix(), rho.matrix(), 1e-14);
}

TEST(Evolve, FockTwoGroundOscillatesAtSqrtTwo) {
  const DensityOperator rho0 = initial_state(FockFieldGroundAtom{}, 3);
  for (double T : {0.1, 0.7, 1.3, 4.0}) {
    ComplexVector psi = ComplexVector::Zero(6);
    psi(idx(2, kGround)) = std::cos(kSqrt2 * T);
    psi(idx(1, kExcited)) = Complex(0.0, -std::sin(kSqrt2 * T));
    EXPECT_MATRIX_NEAR(evolve(rho0, T).matrix(), ComplexMatrix(psi * psi.adjoint()), 1e-13) << "T=" << T;
  }
}

TEST(Evolve, RejectsForeignLayouts) {
  const DensityOperator rho(ModeLayout{{"a", 2}, {"f", 2}}, ComplexMatrix::Identity(4, 4) / 4.0);
  EXPECT_THROW(evolve(rho, 1.0), LayoutMismatch);
  const JCEvolver evolver(3);
  EXPECT_THROW(evolver.evolve(initial_state(VacuumFieldExcitedAtom{}, 2), 1.0), LayoutMismatch);
}

TEST(SectorEvolution, ClosedFormPoints) {
  auto r = sector_evolution(1, pi / 2, 2);
  EXPECT_NEAR(std::abs(r.stay), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.transfer - Complex(0.0, -1.0)), 0.0, 1e-15);

  r = sector_evolution(1, 0.0, 2);
  EXPECT_EQ(r.stay, Complex(1.0));
  EXPECT_NEAR(std::abs(r.transfer), 0.0, 0.0);

  r = sector_evolution(2, pi / (2 * kSqrt2), 3);
  EXPECT_NEAR(std::abs(r.stay), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.transfer - Complex(0.0, -1.0)), 0.0, 1e-15);

  EXPECT_THROW(sector_evolution(0, 1.0, 3), InvalidArgument);
  EXPECT_THROW(sector_evolution(3, 1.0, 3), InvalidArgument);
}

TEST(SectorEvolution, AgreesWithFullPropagatorOnEveryDoublet) {
  constexpr int d = 5;
  const JCEvolver evolver(d);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double T = time(rng);
    const ComplexMatrix u = evolver.propagator(T);
    for (int n = 1; n < d; ++n) {
      const DoubletRotation r = sector_evolution(n, T, d);
      // excited member |n-1, e>
      ComplexVector expected = ComplexVector::Zero(2 * d);
      expected(idx(n - 1, kExcited)) = r.stay;
      expected(idx(n, kGround)) = r.transfer;
      EXPECT_MATRIX_NEAR(ComplexMatrix(u.col(idx(n - 1, kExcited))), ComplexMatrix(expected), 1e-12);
      // ground member |n, g>
      expected.setZero();
      expected(idx(n, kGround)) = r.stay;
      expected(idx(n - 1, kExcited)) = r.transfer;
      EXPECT_MATRIX_NEAR(ComplexMatrix(u.col(idx(n, kGround))), ComplexMatrix(expected), 1e-12);
    }
    EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, 1e-12);  // |0, g> is stationary
  }
}

TEST(Evolve, UnitaryInvariants) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> time(0.0, 7.0);
  for (int d : {2, 3, 4}) {
    const JCEvolver evolver(d);
    const ComplexMatrix n = excitation_number(d);
    for (int trial = 0; trial < 10; ++trial) {
      const DensityOperator rho0 = testing::random_density(jc_layout(d), rng);
      const double t1 = time(rng), t2 = time(rng);
      const DensityOperator rho = evolver.evolve(rho0, t1);

      const DensityDiagnostics diag = validate_density(rho, 1e-10);
      EXPECT_TRUE(diag.valid());
      const RealVector before = hermitian_eigenvalues(rho0.matrix()).eigenvalues;
      const RealVector after = hermitian_eigenvalues(rho.matrix()).eigenvalues;
      EXPECT_LE((before - after).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_NEAR(std::abs((n * rho.matrix()).trace() - (n * rho0.matrix()).trace()), 0.0, 1e-10);

      EXPECT_MATRIX_NEAR(evolver.evolve(rho, t2).matrix(), evolver.evolve(rho0, t1 + t2).matrix(), 1e-10);
    }
  }
}

TEST(Evolve, VacuumExcitedHasPeriodPi) {
  const DensityOperator rho0 = initial_state(VacuumFieldExcitedAtom{}, 2);
  for (double T = 0.0; T < 2 * pi; T += 0.1) {
    EXPECT_MATRIX_NEAR(evolve(rho0, T).matrix(), evolve(rho0, T + pi).matrix(), 1e-10);
  }
}

TEST(InitialState, PureCases) {
  EXPECT_MATRIX_NEAR(initial_state(VacuumFieldExcitedAtom{}, 2).matrix(),
                     DensityOperator::pure(StateVector::basis(jc_layout(2), {0, kExcited})).matrix(), 0.0);
  EXPECT_MATRIX_NEAR(initial_state(FockFieldGroundAtom{}, 3).matrix(),
                     DensityOperator::pure(StateVector::basis(jc_layout(3), {2, kGround})).matrix(), 0.0);
}

TEST(InitialState, ThermalWeightsFromMeanPhoton) {
  const DensityOperator rho = initial_state(ThermalFieldExcitedAtom{0.01}, 3);
  const double p0 = 100.0 / 101.0, p1 = 100.0 / (101.0 * 101.0);
  const ReducedStates r = reduced_states(rho);
  EXPECT_MATRIX_NEAR(r.field.matrix(), testing::diag({p0 / (p0 + p1), p1 / (p0 + p1), 0.0}), 1e-15);
  EXPECT_MATRIX_NEAR(r.atom.matrix(), testing::diag({0.0, 1.0}), 1e-15);
  EXPECT_NEAR(p0, 0.990099, 1e-6);
  EXPECT_NEAR(p1, 0.009803, 1e-6);
}

TEST(InitialState, InsufficientDimension) {
  EXPECT_THROW(initial_state(FockFieldGroundAtom{}, 2), InvalidDimension);
  EXPECT_THROW(initial_state(ThermalFieldExcitedAtom{0.01}, 2), InvalidDimension);
  EXPECT_THROW(initial_state(CoherentFieldExcitedAtom{{0.1, 0.0}}, 2), InvalidDimension);
  EXPECT_EQ(case_letter(ScenarioCase{CoherentFieldExcitedAtom{}}), 'D');
}

TEST(TruncatedThermal, WeightsDecreaseAndLimitToVacuum) {
  const ComplexMatrix m = truncated_thermal(0.7, 6).matrix();
  for (int n = 1; n < 5; ++n) EXPECT_LT(m(n, n).real(), m(n - 1, n - 1).real());
  EXPECT_EQ(m(5, 5), Complex(0.0));
  EXPECT_NEAR(m.trace().real(), 1.0, 1e-15);
  EXPECT_NEAR(truncated_thermal(1e-12, 3).matrix()(0, 0).real(), 1.0, 1e-11);
  EXPECT_THROW(truncated_thermal(0.0, 3), InvalidArgument);
  EXPECT_THROW(truncated_thermal(-1.0, 3), InvalidArgument);
}

TEST(TruncatedCoherent, SmallAmplitude) {
  const StateVector psi = truncated_coherent({0.1, 0.0}, 3);
  const double c0 = std::exp(-1.0 / 200.0), c1 = c0 / 10.0, norm = std::hypot(c0, c1);
  EXPECT_NEAR(std::abs(psi.amplitudes()(0) - c0 / norm), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi.amplitudes()(1) - c1 / norm), 0.0, 1e-15);
  EXPECT_EQ(psi.amplitudes()(2), Complex(0.0));

  const StateVector vac = truncated_coherent({0.0, 0.0}, 4);
  EXPECT_MATRIX_NEAR(ComplexMatrix(vac.amplitudes()), ComplexMatrix(StateVector::basis(field_layout(4), {0}).amplitudes()), 0.0);
}

TEST(TruncatedCoherent, MeanPhotonWithinTruncationLoss) {
  for (double alpha : {0.05, 0.1, 0.3, 0.6}) {
    for (int d : {3, 5, 8}) {
      const ComplexVector c = truncated_coherent({alpha, 0.0}, d).amplitudes();
      double mean = 0.0;
      for (int n = 0; n < d; ++n) mean += n * std::norm(c(n));
      const double loss = coherent_truncation_loss({alpha, 0.0}, d);
      EXPECT_LE(std::abs(mean - alpha * alpha), d * loss + 1e-15) << alpha << " " << d;
    }
  }
}

TEST(TruncatedCoherent, WarnsOnLargeTruncationLoss) {
  std::ostringstream warnings;
  truncated_coherent({0.1, 0.0}, 3, &warnings);
  EXPECT_TRUE(warnings.str().empty());
  truncated_coherent({1.0, 0.0}, 3, &warnings);
  EXPECT_NE(warnings.str().find("warning"), std::string::npos);
  EXPECT_NEAR(coherent_truncation_loss({1.0, 0.0}, 3), 1.0 - 2.0 * std::exp(-1.0), 1e-15);
}

TEST(ReducedStates, VacuumExcited) {
  const JCEvolver evolver(2);
  const DensityOperator rho0 = initial_state(VacuumFieldExcitedAtom{}, 2);
  for (double T : {0.0, 0.3, pi / 4, 2.0}) {
    const ReducedStates r = reduced_states(evolver.evolve(rho0, T));
    const double c2 = std::cos(T) * std::cos(T), s2 = std::sin(T) * std::sin(T);
    EXPECT_MATRIX_NEAR(r.field.matrix(), testing::diag({c2, s2}), 1e-14);
    EXPECT_MATRIX_NEAR(r.atom.matrix(), testing::diag({s2, c2}), 1e-14);
  }
  EXPECT_THROW(reduced_states(DensityOperator(field_layout(2), testing::diag({1, 0}))), LayoutMismatch);
}

TEST(ReducedStates, ThermalAndCoherentMatchClosedForms) {
  const JCEvolver evolver(3);
  const DensityOperator thermal = initial_state(ThermalFieldExcitedAtom{0.01}, 3);
  const DensityOperator coherent = initial_state(CoherentFieldExcitedAtom{{0.1, 0.0}}, 3);
  const auto w = oracle::thermal_weights(0.01);
  const auto c = oracle::coherent_amplitudes(0.1);
  for (double T = 0.0; T < 6.3; T += 0.37) {
    const ReducedStates rc = reduced_states(evolver.evolve(thermal, T));
    const auto oc = oracle::case_c_reduced(T, w.first, w.second);
    EXPECT_MATRIX_NEAR(rc.field.matrix(), oc.field, 1e-13);
    EXPECT_MATRIX_NEAR(rc.atom.matrix(), oc.atom, 1e-13);

    const ReducedStates rd = reduced_states(evolver.evolve(coherent, T));
    const auto od = oracle::case_d_reduced(T, c.first, c.second);
    EXPECT_MATRIX_NEAR(rd.field.matrix(), od.field, 1e-13);
    EXPECT_MATRIX_NEAR(rd.atom.matrix(), od.atom, 1e-13);
  }
}

TEST(ReducedStates, CoherentAtomKeepsCoherenceAtCorrelationPeak) {
  const DensityOperator rho0 = initial_state(CoherentFieldExcitedAtom{{0.1, 0.0}}, 3);
  const ReducedStates r = reduced_states(evolve(rho0, pi / 4));
  const double c0 = std::exp(-1.0 / 200.0), c1 = c0 / 10.0, norm2 = c0 * c0 + c1 * c1;
  const double expected = 2.0 * (c0 * c1 / norm2) * std::cos(pi / (2.0 * kSqrt2)) * std::sin(pi / 4);
  EXPECT_NEAR(l1_coherence(r.atom), expected, 1e-14);
  EXPECT_GT(expected, 1e-4);
}

}  // namespace
}  // namespace jcnc
