#pragma once

#include <array>
#include <cmath>

#include "jcnc/hilbert.hpp"

/// Closed-form values for the resonant Jaynes-Cummings scenarios. Nothing in
/// here touches the matrix engine; these are ground truth for tests and for
/// the comparison report.
namespace jcnc::oracle {

/// All closed-form quantities for vacuum field + excited atom at time T.
struct OracleRecord {
  double T = 0.0;
  double n_c = 0.0;
  double n_f = 0.0;
  double n_a = 0.0;
  double n_f1 = 0.0;
  double n_a1 = 0.0;
  double n_tot1 = 0.0;
  double n_tot2 = 0.0;
  double n_tot_inf = 0.0;
  double chi = 0.0;
  double xi = 0.0;
};

/// (1/4) sqrt(3 + cos 4T)
double chi(double T);
/// sqrt(11 + 4 cos 2T + cos 4T)
double xi(double T);

OracleRecord case_a(double T);

/// Ascending eigenvalues of the partially transposed atom-field state.
std::array<double, 4> case_a_correlation_pt_eigenvalues(double T);
/// Ascending eigenvalues of the partially transposed field beam-splitter output.
std::array<double, 4> case_a_field_pt_eigenvalues(double T);
/// Ascending eigenvalues of the partially transposed atom beam-splitter output.
std::array<double, 4> case_a_atom_pt_eigenvalues(double T);
/// Ascending eigenvalues for the second-layer field branch.
std::array<double, 4> case_a_residual_pt_eigenvalues(double T);

struct ReducedPair {
  ComplexMatrix field;
  ComplexMatrix atom;
};

ReducedPair case_a_reduced(double T);

inline const double kDoubletTwoFrequency = std::sqrt(2.0);
/// Alternative |2,g> <-> |1,e> doublet rate, selectable for comparison runs.
/// The engine-consistent rate is sqrt(2).
inline const double kPrintedCaseBFrequency = std::sqrt(3.0);

struct CaseBRecord {
  double n_c = 0.0;
  double n_a = 0.0;
};

CaseBRecord case_b(double T, double omega_b = kDoubletTwoFrequency);

/// p0, p1 must be non-negative and sum to 1 within 1e-9.
ReducedPair case_c_reduced(double T, double p0, double p1);

/// Real amplitudes with c0^2 + c1^2 = 1 within `norm_tolerance`.
ReducedPair case_d_reduced(double T, double c0, double c1, double norm_tolerance = 1e-9);

struct TwoLevelWeights {
  double first = 0.0;
  double second = 0.0;
};

/// p_n = n^k / (n+1)^(k+1) for k = 0, 1 before renormalization.
TwoLevelWeights thermal_weights_raw(double mean_photon);
TwoLevelWeights thermal_weights(double mean_photon);
/// c0 = exp(-alpha^2/2), c1 = alpha c0 before renormalization.
TwoLevelWeights coherent_amplitudes_raw(double alpha);
TwoLevelWeights coherent_amplitudes(double alpha);

}  // namespace jcnc::oracle
