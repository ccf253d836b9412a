#pragma once

#include <random>

#include <gtest/gtest.h>

#include "jcnc/hilbert.hpp"

namespace jcnc::testing {

inline ComplexMatrix random_ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  return g;
}

/// Random full-rank mixed state over `layout`.
inline DensityOperator random_density(const ModeLayout& layout, std::mt19937_64& rng) {
  const ComplexMatrix g = random_ginibre(layout.total_dim(), layout.total_dim(), rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(layout, rho);
}

inline StateVector random_state(const ModeLayout& layout, std::mt19937_64& rng) {
  ComplexVector psi = random_ginibre(layout.total_dim(), 1, rng).col(0);
  psi.normalize();
  return StateVector(layout, psi);
}

/// Haar-ish unitary from the QR of a Ginibre matrix.
inline ComplexMatrix random_unitary(Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_ginibre(n, n, rng));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

}  // namespace jcnc::testing

#define EXPECT_MATRIX_NEAR(actual, expected, tol) \
  EXPECT_LE(::jcnc::max_abs_deviation((actual), (expected)), (tol))
