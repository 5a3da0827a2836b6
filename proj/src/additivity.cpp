#include "qlds/additivity.hpp"

#include <cmath>

namespace qlds {

AdditivityOperator additivity_operator(const Subspace& h1, const Subspace& h2,
                                       const Tolerance& tol) {
  if (h1.ambient_dim() != h2.ambient_dim()) {
    throw std::invalid_argument("additivity_operator: ambient dimensions differ");
  }
  const CMatrix m = join(h1, h2, tol).projector() + meet(h1, h2, tol).projector() -
                    h1.projector() - h2.projector();
  HermitianEigen eig = hermitian_eigen(m, tol);
  return AdditivityOperator{m, std::move(eig.eigenvalues),
                            std::move(eig.eigenvectors)};
}

DensityMatrix::DensityMatrix(const CMatrix& m, const Tolerance& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  HermitianEigen eig = hermitian_eigen(m, tol);  // rejects non-Hermitian input
  if (eig.eigenvalues(0) < -tol.zero_tol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > tol.zero_tol) {
    throw std::invalid_argument("DensityMatrix: trace must be one");
  }
  matrix_ = 0.5 * (m + m.adjoint());
}

DensityMatrix DensityMatrix::pure(const CVector& state, const Tolerance& tol) {
  const double n = state.norm();
  if (n <= tol.zero_tol) {
    throw std::invalid_argument("DensityMatrix: state vector is zero");
  }
  const CVector unit = state / n;
  return DensityMatrix(unit * unit.adjoint(), tol);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) {
    throw std::invalid_argument("DensityMatrix: dimension must be positive");
  }
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double gleason_probability(const Subspace& h, const DensityMatrix& rho,
                           const Tolerance& tol) {
  if (h.ambient_dim() != rho.dim()) {
    throw std::invalid_argument("gleason_probability: dimension mismatch");
  }
  const double p = (rho.matrix() * h.projector()).trace().real();
  if (p < -tol.zero_tol || p > 1.0 + tol.zero_tol) {
    throw std::runtime_error("gleason_probability: value escapes [0, 1]");
  }
  return std::min(1.0, std::max(0.0, p));
}

double d_scalar(const Subspace& h1, const Subspace& h2, const DensityMatrix& rho,
                const Tolerance& tol) {
  const AdditivityOperator op = additivity_operator(h1, h2, tol);
  if (rho.dim() != op.matrix.rows()) {
    throw std::invalid_argument("d_scalar: dimension mismatch");
  }
  return (rho.matrix() * op.matrix).trace().real();
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Lower: return "Lower";
    case Verdict::Upper: return "Upper";
    case Verdict::Kolmogorov: return "Kolmogorov";
  }
  return "Kolmogorov";
}

PairClassification classify_pair(const Subspace& h1, const Subspace& h2,
                                 const DensityMatrix& rho, double epsilon,
                                 const Tolerance& tol) {
  if (epsilon < 0.0) epsilon = tol.zero_tol;
  const AdditivityOperator op = additivity_operator(h1, h2, tol);
  if (rho.dim() != op.matrix.rows()) {
    throw std::invalid_argument("classify_pair: dimension mismatch");
  }
  const double d = (rho.matrix() * op.matrix).trace().real();
  Verdict verdict = Verdict::Kolmogorov;
  if (d > epsilon) {
    verdict = Verdict::Lower;
  } else if (d < -epsilon) {
    verdict = Verdict::Upper;
  }
  return PairClassification{d,
                            verdict,
                            epsilon,
                            op.lambda_min(),
                            op.lambda_max(),
                            op.matrix.norm() > tol.zero_tol};
}

double AdditivityIdentities::max_residual() const {
  double m = trace;
  for (double r : {meet_product_left, meet_product_right, commutator_left,
                   commutator_right, operator_commutator, complement_flip}) {
    m = std::max(m, r);
  }
  return m;
}

AdditivityIdentities verify_proposition1(const Subspace& h1, const Subspace& h2,
                                         const Tolerance& tol) {
  const CMatrix& p1 = h1.projector();
  const CMatrix& p2 = h2.projector();
  const CMatrix d = additivity_operator(h1, h2, tol).matrix;
  const CMatrix d_flipped =
      additivity_operator(orthocomplement(h1, tol), orthocomplement(h2, tol), tol)
          .matrix;
  const CMatrix meet_gap = meet(h1, h2, tol).projector() - p1 * p2;
  const CMatrix comm = p1 * p2 - p2 * p1;

  AdditivityIdentities out;
  out.trace = std::abs(d.trace());
  out.meet_product_left = (meet_gap - p1 * d).norm();
  out.meet_product_right = (meet_gap - d * p2).norm();
  out.commutator_left = (comm - d * (p1 - p2)).norm();
  out.commutator_right = (comm + (p1 - p2) * d).norm();
  out.operator_commutator = (comm + (p1 * d - d * p1)).norm();
  out.complement_flip = (d_flipped + d).norm();
  out.commutator = comm;
  return out;
}

CompatibilityIndicators compatibility_indicators(const Subspace& h1,
                                                 const Subspace& h2,
                                                 double epsilon,
                                                 const Tolerance& tol) {
  const CMatrix& p1 = h1.projector();
  const CMatrix& p2 = h2.projector();
  Tolerance eps_tol = tol;  // one epsilon for all four tests
  eps_tol.zero_tol = epsilon;
  CompatibilityIndicators out;
  out.operator_zero = additivity_operator(h1, h2, tol).matrix.norm() <= epsilon;
  out.commutator_zero = (p1 * p2 - p2 * p1).norm() <= epsilon;
  out.meet_is_product = (meet(h1, h2, tol).projector() - p1 * p2).norm() <= epsilon;
  out.lattice_commutes = commutes(h1, h2, eps_tol);
  return out;
}

}  // namespace qlds
