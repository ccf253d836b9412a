#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jcnc/hilbert.hpp"

namespace jcnc {

/// Field modes use the truncated bosonic beam splitter; atom modes use the
/// two-level beam-splitter-type map.
enum class ModeKind { field, atom };

/// a^dagger b + a b^dagger on mode x auxiliary, both of dimension d.
ComplexMatrix beam_splitter_generator(int d);

/// Balanced beam splitter exp(-i pi/4 (a^dagger b + a b^dagger)), so that
/// U|1,0> = (|1,0> - i|0,1>)/sqrt(2) and U|0,0> = |0,0>. Cached per dimension.
const ComplexMatrix& beam_splitter_unitary(int d);

/// Two-level beam splitter on |00>,|01>,|10>,|11>: mixes the single-excitation
/// pair like the bosonic d=2 splitter and leaves |11> alone.
ComplexMatrix qubit_beam_splitter();

/// Label given to the vacuum ancilla that meets `label` at a beam splitter.
std::string auxiliary_label(const std::string& label);

/// U (rho x |0><0|) U^dagger over (label, auxiliary_label(label)).
DensityOperator bs_output(const DensityOperator& mode, ModeKind kind = ModeKind::field);

/// Negativity across the mode/ancilla split of bs_output(mode).
double entanglement_potential(const DensityOperator& mode, ModeKind kind = ModeKind::field);

struct BranchNode {
  int depth = 1;
  DensityOperator state;
  double potential = 0.0;
};

/// Beam-splitter cascade for one subsystem. Layer n (1-based) holds 2^(n-1)
/// branches; the children of branch i in layer n are branches 2i (the mode's
/// own output) and 2i+1 (the ancilla output) of layer n+1.
struct CascadeReport {
  std::string subsystem;
  std::vector<std::vector<BranchNode>> layers;
  std::vector<double> layer_sums;
  /// layer_sums[n] / layer_sums[n-1] where the previous sum is positive.
  std::vector<std::optional<double>> depletion_ratios;

  int depth() const noexcept { return static_cast<int>(layers.size()); }
  /// Branch potentials of 1-based layer `layer`.
  std::vector<double> potentials(int layer) const;
};

inline constexpr int kMaxCascadeLayers = 16;

CascadeReport cascade(const DensityOperator& mode, int layers, ModeKind kind = ModeKind::field);

/// N_c plus every branch potential of both cascades through layer `l`.
double total_nonclassicality(double n_c, const CascadeReport& field, const CascadeReport& atom, int l);

inline constexpr double kDefaultDepletionRatio = 2.0 / 5.0;

/// Geometric-series estimate N_c + (N_f + N_a) / (1 - ratio).
double extrapolate_total(double n_c, double n_f, double n_a, double ratio = kDefaultDepletionRatio);

struct TotalsRecord {
  double n_c = 0.0;
  std::vector<double> totals;  // totals[l-1] = N_tot^(l)
  std::optional<double> extrapolated;
};

TotalsRecord summarize_totals(double n_c, const CascadeReport& field, const CascadeReport& atom,
                              bool extrapolate);

/// Child/parent potential ratios, branch by branch, for every parent above
/// `floor`. Ordered by layer, then branch.
std::vector<double> depletion_ratios(const CascadeReport& report, double floor = 1e-3);

}  // namespace jcnc
