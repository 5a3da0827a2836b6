#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qlds {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Numeric cutoffs shared by every module. rank_tol is relative to the largest
// singular value; zero_tol is an absolute residual / distance cutoff.
struct Tolerance {
  double rank_tol = 1e-10;
  double zero_tol = 1e-9;
};

// Process-wide tolerance used as the default argument everywhere. Mutable so a
// front end can apply one override per run.
Tolerance& session_tolerance();
void set_session_tolerance(const Tolerance& tol);

struct HermitianEigen {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // column k pairs with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
// (m + m^dagger)/2 before factoring; a Hermiticity defect beyond
// zero_tol * (1 + |m|_F) is an error, not something to silence.
HermitianEigen hermitian_eigen(const CMatrix& m,
                               const Tolerance& tol = session_tolerance());

// Orthonormal basis of the column space, as a d x rank matrix. Rank counts
// singular values above rank_tol * sigma_max. Rank zero yields a d x 0 matrix,
// the representation of the zero subspace.
CMatrix orthonormal_column_basis(const CMatrix& m,
                                 const Tolerance& tol = session_tolerance());

// |a - b|_F. Shapes must agree.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

// Kronecker product, row-major block convention: result((i*rows(b)+k),(j*cols(b)+l))
// = a(i,j) * b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Throws std::invalid_argument when any entry is NaN or infinite.
void require_finite(const CMatrix& m, const char* what);

}  // namespace qlds
