#pragma once

#include <string>

#include "qlds/subspace.hpp"

namespace qlds {

// D(h1, h2) = P(join) + P(meet) - P(h1) - P(h2), the operator that measures the
// failure of projector additivity for a pair of subspaces. Traceless; zero
// exactly when the pair commutes.
struct AdditivityOperator {
  CMatrix matrix;
  RVector eigenvalues;   // ascending; sums to zero
  CMatrix eigenvectors;  // column k pairs with eigenvalues[k]

  double lambda_min() const { return eigenvalues.size() ? eigenvalues(0) : 0.0; }
  double lambda_max() const {
    return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0;
  }
};

AdditivityOperator additivity_operator(const Subspace& h1, const Subspace& h2,
                                       const Tolerance& tol = session_tolerance());

// Positive semidefinite, unit-trace state. Validation admits eigenvalues down
// to -zero_tol and trace within zero_tol of one; anything worse is an error.
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMatrix& m,
                         const Tolerance& tol = session_tolerance());
  static DensityMatrix pure(const CVector& state,
                            const Tolerance& tol = session_tolerance());
  static DensityMatrix maximally_mixed(int dim);

  const CMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  CMatrix matrix_;
};

// p(h | rho) = Tr[rho P(h)], clamped to [0, 1] when within zero_tol of the
// interval. A value further out indicates a broken input and throws.
double gleason_probability(const Subspace& h, const DensityMatrix& rho,
                           const Tolerance& tol = session_tolerance());

// d(h1, h2 | rho) = Tr[rho D(h1, h2)]. Bounded by the extreme eigenvalues of D.
double d_scalar(const Subspace& h1, const Subspace& h2, const DensityMatrix& rho,
                const Tolerance& tol = session_tolerance());

enum class Verdict { Lower, Upper, Kolmogorov };
const char* to_string(Verdict v);

// Sign classification of the additivity defect under a fixed state:
// d > epsilon is Lower, d < -epsilon is Upper, |d| <= epsilon is Kolmogorov.
struct PairClassification {
  double d_scalar = 0.0;
  Verdict verdict = Verdict::Kolmogorov;
  double epsilon = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  bool operator_nonzero = false;  // |D|_F above zero_tol even if d is small
};

// epsilon < 0 selects the session zero_tol.
PairClassification classify_pair(const Subspace& h1, const Subspace& h2,
                                 const DensityMatrix& rho, double epsilon = -1.0,
                                 const Tolerance& tol = session_tolerance());

// Residual norms of the algebraic identities that characterize D for a pair
// of projectors P1, P2 with M = P(meet):
//   trace:            Tr D = 0
//   meet_product_*:   M - P1 P2 = P1 D = D P2
//   commutator_*:     [P1, P2] = D (P1 - P2) = -(P1 - P2) D
//   operator_commutator: [P1, P2] = -[P1, D]
//   complement_flip:  D(h1-perp, h2-perp) = -D(h1, h2)
struct AdditivityIdentities {
  double trace = 0.0;
  double meet_product_left = 0.0;
  double meet_product_right = 0.0;
  double commutator_left = 0.0;
  double commutator_right = 0.0;
  double operator_commutator = 0.0;
  double complement_flip = 0.0;
  CMatrix commutator;  // [P1, P2], kept for reporting

  double max_residual() const;
  bool pass(double bound) const { return max_residual() <= bound; }
};

AdditivityIdentities verify_proposition1(const Subspace& h1, const Subspace& h2,
                                         const Tolerance& tol = session_tolerance());

// The four equivalent compatibility tests for a pair. All must agree; the
// struct records each so disagreement is visible rather than masked.
struct CompatibilityIndicators {
  bool operator_zero = false;      // |D|_F <= epsilon
  bool commutator_zero = false;    // |[P1, P2]|_F <= epsilon
  bool meet_is_product = false;    // |P(meet) - P1 P2|_F <= epsilon
  bool lattice_commutes = false;   // h1 = (h1 ^ h2) v (h1 ^ h2-perp)

  bool agree() const {
    return operator_zero == commutator_zero && commutator_zero == meet_is_product &&
           meet_is_product == lattice_commutes;
  }
};

CompatibilityIndicators compatibility_indicators(
    const Subspace& h1, const Subspace& h2, double epsilon,
    const Tolerance& tol = session_tolerance());

}  // namespace qlds
