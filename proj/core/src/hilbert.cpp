#include "jcnc/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace jcnc {

namespace {

constexpr double kHermiticityTolerance = 1e-10;

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw ShapeError(msg.str());
  }
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

// Composite offsets for every multi-index over the subsystems in `which`,
// enumerated row-major in the order given.
std::vector<Index> offsets_over(const ModeLayout& layout, const std::vector<std::size_t>& which) {
  std::vector<Index> offsets{0};
  for (std::size_t k : which) {
    const Index stride = layout.stride(k);
    const int dim = layout[k].dim;
    std::vector<Index> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dim));
    for (Index base : offsets) {
      for (int i = 0; i < dim; ++i) next.push_back(base + i * stride);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

// ---------------------------------------------------------------------------
// ModeLayout

ModeLayout::ModeLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
  std::set<std::string_view> seen;
  for (const auto& s : subsystems_) {
    if (s.dim < 2) {
      throw InvalidDimension("subsystem '" + s.label + "' has dimension " + std::to_string(s.dim) +
                             "; minimum is 2");
    }
    if (!seen.insert(s.label).second) {
      throw LabelError("duplicate subsystem label '" + s.label + "'");
    }
  }
}

ModeLayout::ModeLayout(std::initializer_list<Subsystem> subsystems)
    : ModeLayout(std::vector<Subsystem>(subsystems)) {}

Index ModeLayout::total_dim() const noexcept {
  Index total = 1;
  for (const auto& s : subsystems_) total *= s.dim;
  return subsystems_.empty() ? 0 : total;
}

bool ModeLayout::contains(std::string_view label) const noexcept {
  return std::any_of(subsystems_.begin(), subsystems_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t ModeLayout::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  throw LabelError("unknown subsystem label '" + std::string(label) + "' in layout " +
                   to_string(*this));
}

Index ModeLayout::stride(std::size_t i) const {
  Index s = 1;
  for (std::size_t k = i + 1; k < subsystems_.size(); ++k) s *= subsystems_[k].dim;
  return s;
}

ModeLayout ModeLayout::concat(const ModeLayout& other) const {
  std::vector<Subsystem> all = subsystems_;
  all.insert(all.end(), other.subsystems_.begin(), other.subsystems_.end());
  return ModeLayout(std::move(all));
}

std::string to_string(const ModeLayout& layout) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i) out << ", ";
    out << layout[i].label << ":" << layout[i].dim;
  }
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// States

StateVector::StateVector(ModeLayout layout, ComplexVector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total_dim()) {
    throw ShapeError("state vector length " + std::to_string(amplitudes_.size()) +
                     " does not match layout " + to_string(layout_));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("state vector is not normalized (norm " +
                          std::to_string(amplitudes_.norm()) + ")");
  }
}

StateVector StateVector::basis(ModeLayout layout, std::span<const int> occupations) {
  if (occupations.size() != layout.size()) {
    throw ShapeError("basis state needs one occupation per subsystem");
  }
  Index index = 0;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (occupations[k] < 0 || occupations[k] >= layout[k].dim) {
      throw InvalidDimension("occupation " + std::to_string(occupations[k]) +
                             " out of range for subsystem '" + layout[k].label + "'");
    }
    index += occupations[k] * layout.stride(k);
  }
  ComplexVector amps = ComplexVector::Zero(layout.total_dim());
  amps(index) = 1.0;
  return StateVector(std::move(layout), std::move(amps));
}

StateVector StateVector::basis(ModeLayout layout, std::initializer_list<int> occupations) {
  return basis(std::move(layout), std::span<const int>(occupations.begin(), occupations.size()));
}

DensityOperator::DensityOperator(ModeLayout layout, ComplexMatrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  require_square(matrix_, "density operator");
  if (matrix_.rows() != layout_.total_dim()) {
    throw ShapeError("density matrix side " + std::to_string(matrix_.rows()) +
                     " does not match layout " + to_string(layout_));
  }
}

DensityOperator DensityOperator::pure(const StateVector& state) {
  const auto& psi = state.amplitudes();
  return DensityOperator(state.layout(), psi * psi.adjoint());
}

// ---------------------------------------------------------------------------
// Bosonic operators

ComplexMatrix annihilation(int d) {
  if (d < 2) throw InvalidDimension("annihilation operator needs d >= 2, got " + std::to_string(d));
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix creation(int d) { return annihilation(d).adjoint(); }

ComplexMatrix number_operator(int d) {
  if (d < 2) throw InvalidDimension("number operator needs d >= 2, got " + std::to_string(d));
  ComplexMatrix n = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

// ---------------------------------------------------------------------------
// Tensor products

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  ComplexMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (Index i = 0; i < lhs.rows(); ++i) {
    for (Index j = 0; j < lhs.cols(); ++j) {
      out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) = lhs(i, j) * rhs;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& lhs, const ComplexVector& rhs) {
  ComplexVector out(lhs.size() * rhs.size());
  for (Index i = 0; i < lhs.size(); ++i) out.segment(i * rhs.size(), rhs.size()) = lhs(i) * rhs;
  return out;
}

TensorFactor tensor(std::span<const TensorFactor> factors) {
  if (factors.empty()) throw TensorTypeError("tensor product of zero factors");
  const bool matrices = std::holds_alternative<ComplexMatrix>(factors.front());
  for (const auto& f : factors) {
    if (std::holds_alternative<ComplexMatrix>(f) != matrices) {
      throw TensorTypeError("tensor product mixes matrices and vectors");
    }
  }
  if (matrices) {
    ComplexMatrix acc = std::get<ComplexMatrix>(factors.front());
    require_square(acc, "tensor factor");
    for (std::size_t i = 1; i < factors.size(); ++i) {
      const auto& m = std::get<ComplexMatrix>(factors[i]);
      require_square(m, "tensor factor");
      acc = kron(acc, m);
    }
    return acc;
  }
  ComplexVector acc = std::get<ComplexVector>(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, std::get<ComplexVector>(factors[i]));
  return acc;
}

DensityOperator tensor(const DensityOperator& lhs, const DensityOperator& rhs) {
  return DensityOperator(lhs.layout().concat(rhs.layout()), kron(lhs.matrix(), rhs.matrix()));
}

StateVector tensor(const StateVector& lhs, const StateVector& rhs) {
  return StateVector(lhs.layout().concat(rhs.layout()), kron(lhs.amplitudes(), rhs.amplitudes()));
}

// ---------------------------------------------------------------------------
// Partial operations

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep) {
  const ModeLayout& layout = rho.layout();
  if (keep.empty()) throw LabelError("partial trace needs at least one subsystem to keep");

  std::vector<bool> kept(layout.size(), false);
  for (const auto& label : keep) {
    const std::size_t k = layout.index_of(label);
    if (kept[k]) throw LabelError("subsystem '" + label + "' listed twice in keep set");
    kept[k] = true;
  }

  std::vector<std::size_t> kept_idx;
  std::vector<std::size_t> traced_idx;
  std::vector<Subsystem> kept_subsystems;
  for (std::size_t k = 0; k < layout.size(); ++k) {
    if (kept[k]) {
      kept_idx.push_back(k);
      kept_subsystems.push_back(layout[k]);
    } else {
      traced_idx.push_back(k);
    }
  }

  const auto kept_off = offsets_over(layout, kept_idx);
  const auto traced_off = offsets_over(layout, traced_idx);
  const Index n = static_cast<Index>(kept_off.size());

  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (Index t : traced_off) sum += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return DensityOperator(ModeLayout(std::move(kept_subsystems)), std::move(out));
}

ComplexMatrix partial_transpose(const DensityOperator& rho, std::string_view subsystem) {
  const ModeLayout& layout = rho.layout();
  const std::size_t k = layout.index_of(subsystem);
  const Index stride = layout.stride(k);
  const Index dim = layout[k].dim;

  const ComplexMatrix& m = rho.matrix();
  const Index n = m.rows();
  ComplexMatrix out(n, n);
  for (Index row = 0; row < n; ++row) {
    const Index i = (row / stride) % dim;
    for (Index col = 0; col < n; ++col) {
      const Index j = (col / stride) % dim;
      // swap the k-th digit between row and column
      out(row - i * stride + j * stride, col - j * stride + i * stride) = m(row, col);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectra and functionals

Spectrum hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  const double dev = hermiticity_deviation(m);
  if (dev > kHermiticityTolerance) {
    throw ShapeError("hermitian_eigenvalues: matrix deviates from Hermitian by " + std::to_string(dev));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ShapeError("hermitian_eigenvalues: eigensolver failed");
  return Spectrum{solver.eigenvalues()};
}

double negativity(const DensityOperator& rho, std::string_view subsystem) {
  const Spectrum spectrum = hermitian_eigenvalues(partial_transpose(rho, subsystem));
  double sum = 0.0;
  for (double lambda : spectrum.eigenvalues) {
    if (lambda < -kNegativeEigenvalueThreshold) sum -= lambda;
  }
  return sum;
}

double l1_coherence(const ComplexMatrix& m) {
  require_square(m, "l1_coherence");
  return m.cwiseAbs().sum() - m.diagonal().cwiseAbs().sum();
}

double l1_coherence(const DensityOperator& rho) { return l1_coherence(rho.matrix()); }

DensityDiagnostics validate_density(const ComplexMatrix& m, double tol) {
  require_square(m, "validate_density");
  DensityDiagnostics d;
  d.tolerance = tol;
  d.hermiticity_deviation = hermiticity_deviation(m);
  d.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  if (m.size() > 0) {
    const ComplexMatrix hermitian_part = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    d.min_eigenvalue = solver.eigenvalues().minCoeff();
  }
  d.hermiticity_ok = d.hermiticity_deviation <= tol;
  d.trace_ok = d.trace_deviation <= tol;
  d.positivity_ok = d.min_eigenvalue >= -tol;
  return d;
}

DensityDiagnostics validate_density(const DensityOperator& rho, double tol) {
  return validate_density(rho.matrix(), tol);
}

HermitianEigensystem::HermitianEigensystem(const ComplexMatrix& h) {
  require_square(h, "HermitianEigensystem");
  const double dev = hermiticity_deviation(h);
  if (dev > kHermiticityTolerance) {
    throw ShapeError("HermitianEigensystem: matrix deviates from Hermitian by " + std::to_string(dev));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw ShapeError("HermitianEigensystem: eigensolver failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

ComplexMatrix HermitianEigensystem::propagator(double t) const {
  ComplexVector phases(eigenvalues_.size());
  for (Index i = 0; i < eigenvalues_.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -t * eigenvalues_(i)));
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("max_abs_deviation: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace jcnc
