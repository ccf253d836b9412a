#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "jcnc/errors.hpp"

namespace jcnc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Subsystem {
  std::string label;
  int dim = 0;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered list of subsystems defining a tensor-product basis.
///
/// Basis order is row-major over the listed subsystems: the first subsystem's
/// index varies slowest. Labels are unique and every dimension is at least 2.
class ModeLayout {
 public:
  ModeLayout() = default;
  explicit ModeLayout(std::vector<Subsystem> subsystems);
  ModeLayout(std::initializer_list<Subsystem> subsystems);

  const std::vector<Subsystem>& subsystems() const noexcept { return subsystems_; }
  std::size_t size() const noexcept { return subsystems_.size(); }
  bool empty() const noexcept { return subsystems_.empty(); }
  const Subsystem& operator[](std::size_t i) const { return subsystems_[i]; }

  Index total_dim() const noexcept;
  bool contains(std::string_view label) const noexcept;
  /// Position of `label` in the layout. Throws LabelError when absent.
  std::size_t index_of(std::string_view label) const;
  /// Row-major stride of subsystem `i` in the composite index.
  Index stride(std::size_t i) const;

  ModeLayout concat(const ModeLayout& other) const;

  bool operator==(const ModeLayout&) const = default;

 private:
  std::vector<Subsystem> subsystems_;
};

std::string to_string(const ModeLayout& layout);

/// Normalized ket over a layout.
class StateVector {
 public:
  StateVector(ModeLayout layout, ComplexVector amplitudes);

  /// Product basis state; `occupations[k]` indexes subsystem k.
  static StateVector basis(ModeLayout layout, std::span<const int> occupations);
  static StateVector basis(ModeLayout layout, std::initializer_list<int> occupations);

  const ModeLayout& layout() const noexcept { return layout_; }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }

 private:
  ModeLayout layout_;
  ComplexVector amplitudes_;
};

/// Complex square matrix over a layout, intended to be Hermitian, unit-trace
/// and positive semidefinite. The constructor only checks the shape; use
/// validate_density() for the physical checks.
class DensityOperator {
 public:
  DensityOperator(ModeLayout layout, ComplexMatrix matrix);

  static DensityOperator pure(const StateVector& state);

  const ModeLayout& layout() const noexcept { return layout_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }

 private:
  ModeLayout layout_;
  ComplexMatrix matrix_;
};

/// Real eigenvalues in ascending order.
struct Spectrum {
  RealVector eigenvalues;
};

/// Truncated bosonic lowering operator: entry (n-1, n) = sqrt(n).
ComplexMatrix annihilation(int d);
ComplexMatrix creation(int d);
ComplexMatrix number_operator(int d);

using TensorFactor = std::variant<ComplexMatrix, ComplexVector>;

/// Kronecker product of all factors, leftmost slowest. Factors must be all
/// square matrices or all vectors; anything else raises TensorTypeError.
TensorFactor tensor(std::span<const TensorFactor> factors);

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexVector kron(const ComplexVector& lhs, const ComplexVector& rhs);
DensityOperator tensor(const DensityOperator& lhs, const DensityOperator& rhs);
StateVector tensor(const StateVector& lhs, const StateVector& rhs);

/// Reduced operator over the `keep` subsystems, in their layout order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep);

/// Transpose on the indices of one subsystem.
ComplexMatrix partial_transpose(const DensityOperator& rho, std::string_view subsystem);

/// Eigenvalues of a Hermitian matrix, ascending. Throws ShapeError for
/// non-square input or a Hermiticity deviation above 1e-10.
Spectrum hermitian_eigenvalues(const ComplexMatrix& m);

inline constexpr double kNegativeEigenvalueThreshold = 1e-12;

/// Sum of |negative eigenvalues| of the partial transpose on `subsystem`.
double negativity(const DensityOperator& rho, std::string_view subsystem);

/// l1 norm of the off-diagonal entries in the computational basis.
double l1_coherence(const DensityOperator& rho);
double l1_coherence(const ComplexMatrix& m);

struct DensityDiagnostics {
  double hermiticity_deviation = 0.0;  // max |M - M^dagger| elementwise
  double trace_deviation = 0.0;        // |tr M - 1|
  double min_eigenvalue = 0.0;         // of the Hermitian part
  double tolerance = 0.0;
  bool hermiticity_ok = true;
  bool trace_ok = true;
  bool positivity_ok = true;

  bool valid() const noexcept { return hermiticity_ok && trace_ok && positivity_ok; }
};

DensityDiagnostics validate_density(const DensityOperator& rho, double tol);
DensityDiagnostics validate_density(const ComplexMatrix& m, double tol);

/// Spectral decomposition H = V diag(w) V^dagger of a Hermitian matrix, used
/// for matrix functions such as the propagator exp(-i t H).
class HermitianEigensystem {
 public:
  explicit HermitianEigensystem(const ComplexMatrix& h);

  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }
  Index dim() const noexcept { return eigenvalues_.size(); }

  /// exp(-i t H)
  ComplexMatrix propagator(double t) const;

 private:
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace jcnc
