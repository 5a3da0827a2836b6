#pragma once

#include <array>
#include <vector>

#include "qlds/additivity.hpp"
#include "qlds/subspace.hpp"

namespace qlds {

// SU(2) rotation parameters (a, b) with |a|^2 + |b|^2 = 1, defining
// U = [[a, b], [-conj(b), conj(a)]]. The x-basis measurement is (1, 0).
class Su2Setting {
 public:
  Su2Setting(Complex a, Complex b, const Tolerance& tol = session_tolerance());
  // Phase-only rotation a = exp(i theta), b = 0.
  static Su2Setting from_theta(double theta);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  CMatrix unitary() const;

 private:
  Complex a_, b_;
};

// Spin-x component with outcomes +-1/2: (1/2) Pi(x,1) - (1/2) Pi(x,0).
CMatrix spin_x();
// Rank-one projector onto the x-basis outcome (1 = aligned, 0 = anti).
CMatrix pi_x(int outcome);
// Outcome kets: |x;1> = (1,1)/sqrt2, |x;0> = (1,-1)/sqrt2.
CVector x_ket(int outcome);

// Projectors for the rotated spin component, in closed form:
//   Pi(a,b;1) = 1/2 [[|a+b|^2,        a^2 - b^2   ],
//                    [conj(a)^2 - conj(b)^2, |a-b|^2]]
// and Pi(a,b;0) its complement. Equal to U Pi(x,k) U^dagger.
std::array<CMatrix, 2> spin_projectors(const Su2Setting& s);  // [Pi0, Pi1]

// Rotated outcome kets U |x;k>.
CVector rotated_ket(const Su2Setting& s, int outcome);

// Maximally correlated pair state (|11> + |00>)/sqrt2.
CVector bell_state();
DensityMatrix bell_density();

// Correlation parameters of a setting against the x basis.
double chsh_kappa(const Su2Setting& s);   // (Re a)^2/2 + (Im b)^2/2
double chsh_lambda(const Su2Setting& s);  // (|a+b|^4 + |a-b|^4 + 2 Re (a^2-b^2)^2)/8

enum class Meas { A = 0, B = 1, C = 2, D = 3 };
constexpr std::array<Meas, 4> kAllMeas{Meas::A, Meas::B, Meas::C, Meas::D};
const char* to_string(Meas m);

// The four two-particle measurements built from one setting:
//   A = x (x) x,  B = x (x) rotated,  C = rotated (x) x,  D = rotated (x) rotated.
// Outcome subspaces are numbered by the outcome pair: 1 = (1,1), 2 = (1,0),
// 3 = (0,1), 4 = (0,0). First tensor factor is the first particle.
class MeasurementSetup {
 public:
  explicit MeasurementSetup(const Su2Setting& s,
                            const Tolerance& tol = session_tolerance());

  const Su2Setting& setting() const { return setting_; }
  // (1/4)[P(H1) + P(H4)] - (1/4)[P(H2) + P(H3)], the product observable.
  CMatrix observable(Meas m) const;
  const Subspace& outcome_subspace(Meas m, int k) const;  // k in 1..4

  // H1 v H4: both spins agree under measurement m.
  Subspace equal_outcome_join(Meas m, const Tolerance& tol = session_tolerance()) const;
  // H2 v H3: the spins differ.
  Subspace differing_outcome_join(Meas m, const Tolerance& tol = session_tolerance()) const;

 private:
  Su2Setting setting_;
  std::vector<Subspace> outcomes_;  // index 4 * meas + (k - 1)
};

// Boolean algebras generated by the four outcome bases. Masks follow the
// outcome numbering: bit k-1 selects the generating vector of outcome k, so
// the agreement element H7 is mask 0b1001 and H5 = H1 v H2 is mask 0b0011.
struct OutcomeAlgebras {
  BooleanAlgebra a, b, c, d;
  const BooleanAlgebra& of(Meas m) const;
};

OutcomeAlgebras boolean_tables(const Su2Setting& s,
                               const Tolerance& tol = session_tolerance());

// Joint outcome probabilities of the pair state under the four measurements.
// Rows follow kAllMeas; columns are outcome pairs (1,1), (0,1), (1,0), (0,0).
// Every cell is evaluated both as <s| P |s> and from the closed forms in
// kappa / lambda; cross_residual is the largest disagreement.
struct ProbabilityTable {
  std::array<std::array<double, 4>, 4> cells{};
  double kappa = 0.0;
  double lambda_val = 0.0;
  double cross_residual = 0.0;

  double row_sum(Meas m) const;
};

ProbabilityTable probability_table(const Su2Setting& s,
                                   const Tolerance& tol = session_tolerance());

// Sum of the four agreement probabilities
//   p(H7A) + p(H7B) + p(H7C) + p(H2D v H3D)
// evaluated through the lattice joins and the pair state, cross-checked
// against the closed form 2 + 4 kappa - 2 lambda. Classically bounded by 3.
double chsh_lhs(const Su2Setting& s, const Tolerance& tol = session_tolerance());

// Disjointness evidence for the four CHSH subspaces: norms of all 16 products
// P(H_iA) P(H_jB) P(H_kC) P(H_lD), i,j,k in {1,4}, l in {2,3} (index order:
// ((i,j,k,l) with i slowest), plus the dimension of the four-fold lattice meet.
// degenerate flags settings where the rotated basis coincides with the x basis
// and all four algebras collapse into one.
struct MeetZeroReport {
  std::array<double, 16> product_norms{};
  double max_product_norm = 0.0;
  int meet_dimension = 0;
  bool degenerate = false;
};

MeetZeroReport verify_meet_zero(const Su2Setting& s,
                                const Tolerance& tol = session_tolerance());

// Union-style bound sum p(h_i) <= n - 1 for subspaces whose overall meet is
// the zero subspace. Requires that precondition and throws when it fails.
struct BoundCheck {
  double sum = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

BoundCheck proposition2_bound(const std::vector<Subspace>& subspaces,
                              const DensityMatrix& rho,
                              const Tolerance& tol = session_tolerance());

// Complement-side union bound: lhs_sum = sum of the four disagreement
// probabilities, joint = p(join of the four complements) = 1. The classical
// union bound needs lhs_sum >= joint; violated means lhs_sum < 1 - zero_tol.
struct BooleReport {
  double lhs_sum = 0.0;
  double joint = 0.0;
  bool violated = false;
};

BooleReport boole_violation(const Su2Setting& s,
                            const Tolerance& tol = session_tolerance());

// [P(H7A), P(H7B)], validated against its tensor decomposition
//   Pi(x,1) (x) [Pi(x,1), Pi(a,b;1)] + Pi(x,0) (x) [Pi(x,0), Pi(a,b;0)].
CMatrix commutator_witness(const Su2Setting& s,
                           const Tolerance& tol = session_tolerance());

}  // namespace qlds
