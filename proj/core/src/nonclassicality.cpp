#include "jcnc/nonclassicality.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace jcnc {

ComplexMatrix beam_splitter_generator(int d) {
  const ComplexMatrix a = annihilation(d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix mode = kron(a, id);
  const ComplexMatrix aux = kron(id, a);
  return mode.adjoint() * aux + mode * aux.adjoint();
}

const ComplexMatrix& beam_splitter_unitary(int d) {
  static std::mutex mutex;
  static std::map<int, ComplexMatrix> cache;

  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    const HermitianEigensystem spectral(beam_splitter_generator(d));
    it = cache.emplace(d, spectral.propagator(std::numbers::pi / 4.0)).first;
  }
  return it->second;
}

ComplexMatrix qubit_beam_splitter() {
  const double r = std::numbers::sqrt2 / 2.0;
  const Complex minus_i(0.0, -1.0);
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  // columns are the images of |00>, |01>, |10>, |11>
  u(0, 0) = 1.0;
  u(1, 1) = r;
  u(2, 1) = minus_i * r;
  u(2, 2) = r;
  u(1, 2) = minus_i * r;
  u(3, 3) = 1.0;
  return u;
}

std::string auxiliary_label(const std::string& label) { return label + "0"; }

DensityOperator bs_output(const DensityOperator& mode, ModeKind kind) {
  const ModeLayout& layout = mode.layout();
  if (layout.size() != 1) {
    throw LayoutMismatch("bs_output expects a single-mode state, got " + to_string(layout));
  }
  const int d = layout[0].dim;
  if (kind == ModeKind::atom && d != 2) {
    throw InvalidDimension("atom-kind beam splitter needs a two-level mode, got d=" + std::to_string(d));
  }

  ComplexMatrix vacuum = ComplexMatrix::Zero(d, d);
  vacuum(0, 0) = 1.0;
  const ComplexMatrix u = kind == ModeKind::atom ? qubit_beam_splitter() : beam_splitter_unitary(d);
  ComplexMatrix out = u * kron(mode.matrix(), vacuum) * u.adjoint();

  const std::string& label = layout[0].label;
  return DensityOperator(ModeLayout{{label, d}, {auxiliary_label(label), d}}, std::move(out));
}

double entanglement_potential(const DensityOperator& mode, ModeKind kind) {
  const DensityOperator out = bs_output(mode, kind);
  return negativity(out, out.layout()[1].label);
}

std::vector<double> CascadeReport::potentials(int layer) const {
  std::vector<double> out;
  for (const auto& node : layers.at(static_cast<std::size_t>(layer - 1))) out.push_back(node.potential);
  return out;
}

CascadeReport cascade(const DensityOperator& mode, int layers, ModeKind kind) {
  if (layers < 1 || layers > kMaxCascadeLayers) {
    throw InvalidArgument("cascade layer count must lie in [1, " + std::to_string(kMaxCascadeLayers) +
                          "], got " + std::to_string(layers));
  }
  if (mode.layout().size() != 1) {
    throw LayoutMismatch("cascade expects a single-mode state, got " + to_string(mode.layout()));
  }

  CascadeReport report;
  report.subsystem = mode.layout()[0].label;
  const std::string label = report.subsystem;
  const std::string aux = auxiliary_label(label);

  std::vector<DensityOperator> frontier{mode};
  for (int depth = 1; depth <= layers; ++depth) {
    std::vector<BranchNode> layer;
    std::vector<DensityOperator> next;
    layer.reserve(frontier.size());
    for (auto& state : frontier) {
      const DensityOperator out = bs_output(state, kind);
      const double potential = negativity(out, aux);
      if (depth < layers) {
        // Children are relabelled to the parent's label so every branch stays
        // a single mode named after its subsystem.
        const DensityOperator own = partial_trace(out, {label});
        const DensityOperator anc = partial_trace(out, {aux});
        next.push_back(own);
        next.emplace_back(own.layout(), anc.matrix());
      }
      layer.push_back(BranchNode{depth, std::move(state), potential});
    }
    report.layer_sums.push_back(std::accumulate(layer.begin(), layer.end(), 0.0,
                                                [](double s, const BranchNode& n) { return s + n.potential; }));
    report.layers.push_back(std::move(layer));
    frontier = std::move(next);
  }

  for (std::size_t n = 1; n < report.layer_sums.size(); ++n) {
    const double prev = report.layer_sums[n - 1];
    report.depletion_ratios.push_back(prev > 0.0 ? std::optional(report.layer_sums[n] / prev) : std::nullopt);
  }
  return report;
}

double total_nonclassicality(double n_c, const CascadeReport& field, const CascadeReport& atom, int l) {
  if (l < 1 || l > field.depth() || l > atom.depth()) {
    throw InvalidArgument("total_nonclassicality: layer " + std::to_string(l) +
                          " exceeds cascade depth (field " + std::to_string(field.depth()) + ", atom " +
                          std::to_string(atom.depth()) + ")");
  }
  double total = n_c;
  for (int n = 0; n < l; ++n) total += field.layer_sums[n] + atom.layer_sums[n];
  return total;
}

double extrapolate_total(double n_c, double n_f, double n_a, double ratio) {
  if (!(ratio >= 0.0 && ratio < 1.0)) {
    throw InvalidArgument("extrapolation ratio must lie in [0, 1), got " + std::to_string(ratio));
  }
  return n_c + (n_f + n_a) / (1.0 - ratio);
}

TotalsRecord summarize_totals(double n_c, const CascadeReport& field, const CascadeReport& atom,
                              bool extrapolate) {
  TotalsRecord record;
  record.n_c = n_c;
  const int depth = std::min(field.depth(), atom.depth());
  for (int l = 1; l <= depth; ++l) record.totals.push_back(total_nonclassicality(n_c, field, atom, l));
  if (extrapolate) record.extrapolated = extrapolate_total(n_c, field.layer_sums.at(0), atom.layer_sums.at(0));
  return record;
}

std::vector<double> depletion_ratios(const CascadeReport& report, double floor) {
  std::vector<double> ratios;
  for (std::size_t n = 1; n < report.layers.size(); ++n) {
    const auto& parents = report.layers[n - 1];
    const auto& children = report.layers[n];
    for (std::size_t c = 0; c < children.size(); ++c) {
      const double parent = parents[c / 2].potential;
      if (parent > floor) ratios.push_back(children[c].potential / parent);
    }
  }
  return ratios;
}

}  // namespace jcnc
