#include "qlds/linalg.hpp"

#include <cmath>

namespace qlds {

Tolerance& session_tolerance() {
  static Tolerance tol;
  return tol;
}

void set_session_tolerance(const Tolerance& tol) {
  if (!(tol.rank_tol > 0.0) || !(tol.zero_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be strictly positive");
  }
  session_tolerance() = tol;
}

void require_finite(const CMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

HermitianEigen hermitian_eigen(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eigen: matrix must be square");
  }
  require_finite(m, "hermitian_eigen");
  const double defect = (m - m.adjoint()).norm();
  if (defect > tol.zero_tol * (1.0 + m.norm())) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix orthonormal_column_basis(const CMatrix& m, const Tolerance& tol) {
  if (m.cols() == 0 || m.rows() == 0) {
    return CMatrix::Zero(m.rows(), 0);
  }
  require_finite(m, "orthonormal_column_basis");
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = tol.rank_tol * sigma(0);
  Eigen::Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  if (rank == 0 || sigma(0) == 0.0) {
    return CMatrix::Zero(m.rows(), 0);
  }
  return svd.matrixU().leftCols(rank);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  }
  return (a - b).norm();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qlds
