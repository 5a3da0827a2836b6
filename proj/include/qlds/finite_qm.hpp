#pragma once

#include <cstdint>
#include <vector>

#include "qlds/additivity.hpp"
#include "qlds/subspace.hpp"

namespace qlds {

// Phase space Z(d) x Z(d) for odd dimension d >= 3. Odd d keeps 2 invertible
// mod d, which the displacement phase convention requires.
class FiniteSystem {
 public:
  explicit FiniteSystem(int d);

  int dim() const { return d_; }
  // exp(2 pi i k / d), k reduced mod d.
  Complex omega(long long k) const;
  // Multiplicative inverse of 2 mod d, i.e. (d + 1) / 2.
  int two_inverse() const { return (d_ + 1) / 2; }

  // Clock operator: diag(omega^0, ..., omega^(d-1)) in the position basis.
  CMatrix z_op() const;
  // Cyclic shift: X e_n = e_{n+1 mod d}.
  CMatrix x_op() const;
  // Position-to-momentum change of basis; column m is the momentum state m.
  CMatrix fourier() const;

  // D(alpha, beta) = Z^alpha X^beta omega(-2^{-1} alpha beta). Unitary;
  // D(0, 0) = 1. Indices are taken mod d.
  CMatrix displacement(long long alpha, long long beta) const;

  CVector position_state(int n) const;
  CVector momentum_state(int m) const;

 private:
  int d_;
};

// The d^2 states D(alpha, beta) |f> for a fiducial |f>. The fiducial must be
// genuinely spread out: at least two components above zero_tol in the position
// basis and in the momentum basis, otherwise displacements collapse onto a
// basis family and the overlap structure degenerates.
class CoherentFamily {
 public:
  CoherentFamily(const FiniteSystem& system, const CVector& fiducial,
                 const Tolerance& tol = session_tolerance());

  const FiniteSystem& system() const { return system_; }
  const CVector& fiducial() const { return fiducial_; }

  const CVector& state(int alpha, int beta) const;
  Subspace subspace(int alpha, int beta) const;

  // <C; alpha, beta | C; gamma, delta> by the phase-weighted autocorrelation
  // sum over the fiducial components. Matches overlap_direct to rounding.
  Complex overlap(int alpha, int beta, int gamma, int delta) const;
  // The same overlap as a plain inner product of the two cached states.
  Complex overlap_direct(int alpha, int beta, int gamma, int delta) const;

  // Projector onto the span of the two states, built by orthogonalizing the
  // second state against the first. Requires |overlap| < 1.
  CMatrix join_projector(int alpha, int beta, int gamma, int delta,
                         const Tolerance& tol = session_tolerance()) const;

  // Additivity operator of the two one-dimensional subspaces in closed form:
  //   |l|^2/(1 - |l|^2) (P1 + P2) - 1/(1 - |l|^2) (P1 P2 + P2 P1),
  // l the pair overlap. Errors on coincident indices and on |l| = 1.
  AdditivityOperator pair_additivity(int alpha, int beta, int gamma, int delta,
                                     const Tolerance& tol = session_tolerance()) const;

  // | (1/d) sum_{alpha,beta} P(alpha,beta) - 1 |_F.
  double resolution_of_identity_residual() const;

 private:
  FiniteSystem system_;
  CVector fiducial_;
  std::vector<CVector> states_;  // index alpha * d + beta
};

// Normalized complex Gaussian vector from a seeded generator. Generic, so it
// is a valid fiducial with probability one; the seed makes runs reproducible.
CVector random_fiducial(int d, std::uint64_t seed);

}  // namespace qlds
