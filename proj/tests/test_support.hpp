#pragma once

#include <random>

#include "qlds/additivity.hpp"
#include "qlds/subspace.hpp"

namespace qlds_test {

inline qlds::CMatrix random_gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qlds::CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = qlds::Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

inline qlds::CMatrix random_unitary(int d, std::mt19937_64& rng) {
  const qlds::CMatrix g = random_gaussian(d, d, rng);
  Eigen::HouseholderQR<qlds::CMatrix> qr(g);
  qlds::CMatrix q = qr.householderQ();
  // Normalize column phases so the distribution does not favour R's signs.
  const qlds::CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const qlds::Complex diag = r(i, i);
    if (std::abs(diag) > 0.0) q.col(i) *= diag / std::abs(diag);
  }
  return q;
}

inline qlds::Subspace random_subspace(int d, int k, std::mt19937_64& rng) {
  if (k == 0) return qlds::Subspace::zero(d);
  return qlds::Subspace::from_span(random_gaussian(d, k, rng));
}

inline qlds::DensityMatrix random_density(int d, std::mt19937_64& rng) {
  const qlds::CMatrix g = random_gaussian(d, d, rng);
  qlds::CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return qlds::DensityMatrix(rho);
}

}  // namespace qlds_test
