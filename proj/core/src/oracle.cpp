#include "jcnc/oracle.hpp"

#include <algorithm>
#include <numbers>

namespace jcnc::oracle {

namespace {

std::array<double, 4> sorted(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

double field_negativity(double T) {
  return -0.25 * (1.0 + std::cos(2.0 * T) - std::sqrt(3.0 + std::cos(4.0 * T)));
}

double residual_negativity(double T) { return -0.125 * (3.0 + std::cos(2.0 * T) - xi(T)); }

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

double chi(double T) { return 0.25 * std::sqrt(3.0 + std::cos(4.0 * T)); }

double xi(double T) { return std::sqrt(11.0 + 4.0 * std::cos(2.0 * T) + std::cos(4.0 * T)); }

OracleRecord case_a(double T) {
  constexpr double kQuarterTurn = std::numbers::pi / 2.0;
  OracleRecord r;
  r.T = T;
  r.chi = chi(T);
  r.xi = xi(T);
  r.n_c = 0.5 * std::abs(std::sin(2.0 * T));
  r.n_f = field_negativity(T);
  r.n_a = field_negativity(T + kQuarterTurn);
  r.n_f1 = residual_negativity(T);
  r.n_a1 = residual_negativity(T + kQuarterTurn);
  r.n_tot1 = r.n_c + r.n_f + r.n_a;
  r.n_tot2 = r.n_tot1 + 2.0 * r.n_f1 + 2.0 * r.n_a1;
  r.n_tot_inf = r.n_c + 5.0 / 3.0 * (r.n_f + r.n_a);
  return r;
}

std::array<double, 4> case_a_correlation_pt_eigenvalues(double T) {
  const double c2 = std::cos(T) * std::cos(T);
  const double s2 = std::sin(T) * std::sin(T);
  const double half = 0.5 * std::abs(std::sin(2.0 * T));
  return sorted({c2, s2, half, -half});
}

std::array<double, 4> case_a_field_pt_eigenvalues(double T) {
  const double c2 = std::cos(T) * std::cos(T);
  const double s2 = std::sin(T) * std::sin(T);
  return sorted({s2 / 2.0, s2 / 2.0, c2 / 2.0 + chi(T), c2 / 2.0 - chi(T)});
}

std::array<double, 4> case_a_atom_pt_eigenvalues(double T) {
  const double c2 = std::cos(T) * std::cos(T);
  const double s2 = std::sin(T) * std::sin(T);
  return sorted({c2 / 2.0, c2 / 2.0, s2 / 2.0 + chi(T), s2 / 2.0 - chi(T)});
}

std::array<double, 4> case_a_residual_pt_eigenvalues(double T) {
  const double s2 = std::sin(T) * std::sin(T);
  const double base = 3.0 + std::cos(2.0 * T);
  return sorted({s2 / 4.0, s2 / 4.0, (base + xi(T)) / 8.0, (base - xi(T)) / 8.0});
}

ReducedPair case_a_reduced(double T) {
  const double c2 = std::cos(T) * std::cos(T);
  const double s2 = std::sin(T) * std::sin(T);
  return {diag2(c2, s2), diag2(s2, c2)};
}

CaseBRecord case_b(double T, double omega_b) {
  if (!(omega_b > 0.0)) throw InvalidArgument("case_b: doublet frequency must be positive");
  const double w = omega_b * T;
  return {0.5 * std::abs(std::sin(2.0 * w)),
          -0.25 * (1.0 + std::cos(2.0 * w) - std::sqrt(3.0 + std::cos(4.0 * w)))};
}

ReducedPair case_c_reduced(double T, double p0, double p1) {
  if (p0 < 0.0 || p1 < 0.0 || std::abs(p0 + p1 - 1.0) > 1e-9) {
    throw InvalidArgument("case_c_reduced: weights must be non-negative and sum to 1");
  }
  const double s = std::sin(T), c = std::cos(T);
  const double s2r = std::sin(std::sqrt(2.0) * T), c2r = std::cos(std::sqrt(2.0) * T);

  ReducedPair out;
  out.atom = diag2(p0 * s * s + p1 * s2r * s2r, p0 * c * c + p1 * c2r * c2r);
  out.field = ComplexMatrix::Zero(3, 3);
  out.field(0, 0) = p0 * c * c;
  out.field(1, 1) = p0 * s * s + p1 * c2r * c2r;
  out.field(2, 2) = p1 * s2r * s2r;
  return out;
}

ReducedPair case_d_reduced(double T, double c0, double c1, double norm_tolerance) {
  if (std::abs(c0 * c0 + c1 * c1 - 1.0) > norm_tolerance) {
    throw InvalidArgument("case_d_reduced: amplitudes must satisfy c0^2 + c1^2 = 1");
  }
  const double s = std::sin(T), c = std::cos(T);
  const double s2r = std::sin(std::sqrt(2.0) * T), c2r = std::cos(std::sqrt(2.0) * T);
  const Complex i(0.0, 1.0);

  ReducedPair out;
  out.atom = diag2(c0 * c0 * s * s + c1 * c1 * s2r * s2r, c0 * c0 * c * c + c1 * c1 * c2r * c2r);
  // i c0 c1 cos(sqrt2 T) sin T |1_a><0_a| + h.c.
  out.atom(1, 0) = i * c0 * c1 * c2r * s;
  out.atom(0, 1) = std::conj(out.atom(1, 0));

  out.field = ComplexMatrix::Zero(3, 3);
  out.field(0, 0) = c0 * c0 * c * c;
  out.field(1, 1) = c0 * c0 * s * s + c1 * c1 * c2r * c2r;
  out.field(2, 2) = c1 * c1 * s2r * s2r;
  out.field(0, 1) = out.field(1, 0) = c0 * c1 * c * c2r;
  out.field(1, 2) = out.field(2, 1) = c0 * c1 * s * s2r;
  return out;
}

TwoLevelWeights thermal_weights_raw(double mean_photon) {
  return {1.0 / (mean_photon + 1.0), mean_photon / ((mean_photon + 1.0) * (mean_photon + 1.0))};
}

TwoLevelWeights thermal_weights(double mean_photon) {
  const auto raw = thermal_weights_raw(mean_photon);
  const double total = raw.first + raw.second;
  return {raw.first / total, raw.second / total};
}

TwoLevelWeights coherent_amplitudes_raw(double alpha) {
  const double c0 = std::exp(-0.5 * alpha * alpha);
  return {c0, alpha * c0};
}

TwoLevelWeights coherent_amplitudes(double alpha) {
  const auto raw = coherent_amplitudes_raw(alpha);
  const double norm = std::hypot(raw.first, raw.second);
  return {raw.first / norm, raw.second / norm};
}

}  // namespace jcnc::oracle
