#include "qlds/chsh.hpp"

#include <cmath>

namespace qlds {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

// Outcome pair (first, second) for outcome index k in 1..4.
constexpr int kOutcomePair[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};

}  // namespace

Su2Setting::Su2Setting(Complex a, Complex b, const Tolerance& tol) : a_(a), b_(b) {
  const double n = std::norm(a) + std::norm(b);
  if (std::abs(n - 1.0) > tol.zero_tol || !std::isfinite(n)) {
    throw std::invalid_argument("Su2Setting: |a|^2 + |b|^2 must be one");
  }
}

Su2Setting Su2Setting::from_theta(double theta) {
  return Su2Setting(std::polar(1.0, theta), 0.0);
}

CMatrix Su2Setting::unitary() const {
  CMatrix u(2, 2);
  u << a_, b_, -std::conj(b_), std::conj(a_);
  return u;
}

CMatrix spin_x() {
  return 0.5 * pi_x(1) - 0.5 * pi_x(0);
}

CVector x_ket(int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("x_ket: outcome must be 0 or 1");
  }
  CVector v(2);
  v << kInvSqrt2, (outcome == 1 ? kInvSqrt2 : -kInvSqrt2);
  return v;
}

CMatrix pi_x(int outcome) {
  const CVector k = x_ket(outcome);
  return k * k.adjoint();
}

std::array<CMatrix, 2> spin_projectors(const Su2Setting& s) {
  const Complex a = s.a();
  const Complex b = s.b();
  const double plus = std::norm(a + b);
  const double minus = std::norm(a - b);
  const Complex off = a * a - b * b;
  CMatrix pi1(2, 2), pi0(2, 2);
  pi1 << 0.5 * plus, 0.5 * off, 0.5 * std::conj(off), 0.5 * minus;
  pi0 << 0.5 * minus, -0.5 * off, -0.5 * std::conj(off), 0.5 * plus;
  return {pi0, pi1};
}

CVector rotated_ket(const Su2Setting& s, int outcome) {
  return s.unitary() * x_ket(outcome);
}

CVector bell_state() {
  CVector v(4);
  v << kInvSqrt2, 0.0, 0.0, kInvSqrt2;
  return v;
}

DensityMatrix bell_density() {
  return DensityMatrix::pure(bell_state());
}

double chsh_kappa(const Su2Setting& s) {
  const double ar = s.a().real();
  const double bi = s.b().imag();
  return 0.5 * (ar * ar + bi * bi);
}

double chsh_lambda(const Su2Setting& s) {
  const Complex a = s.a();
  const Complex b = s.b();
  const double plus = std::norm(a + b);
  const double minus = std::norm(a - b);
  const Complex off = a * a - b * b;
  return (plus * plus + minus * minus + 2.0 * (off * off).real()) / 8.0;
}

const char* to_string(Meas m) {
  switch (m) {
    case Meas::A: return "A";
    case Meas::B: return "B";
    case Meas::C: return "C";
    case Meas::D: return "D";
  }
  return "A";
}

MeasurementSetup::MeasurementSetup(const Su2Setting& s, const Tolerance& tol)
    : setting_(s) {
  const std::array<CVector, 2> x_basis{x_ket(0), x_ket(1)};
  const std::array<CVector, 2> rot_basis{rotated_ket(s, 0), rotated_ket(s, 1)};
  outcomes_.reserve(16);
  for (Meas m : kAllMeas) {
    const bool first_rotated = (m == Meas::C || m == Meas::D);
    const bool second_rotated = (m == Meas::B || m == Meas::D);
    const auto& first = first_rotated ? rot_basis : x_basis;
    const auto& second = second_rotated ? rot_basis : x_basis;
    for (int k = 1; k <= 4; ++k) {
      const CVector ket =
          kron(first[kOutcomePair[k - 1][0]], second[kOutcomePair[k - 1][1]]);
      outcomes_.push_back(Subspace::from_vector(ket, tol));
    }
  }
}

const Subspace& MeasurementSetup::outcome_subspace(Meas m, int k) const {
  if (k < 1 || k > 4) {
    throw std::invalid_argument("outcome_subspace: outcome index must be 1..4");
  }
  return outcomes_[static_cast<std::size_t>(m) * 4 + (k - 1)];
}

CMatrix MeasurementSetup::observable(Meas m) const {
  return 0.25 * (outcome_subspace(m, 1).projector() +
                 outcome_subspace(m, 4).projector()) -
         0.25 * (outcome_subspace(m, 2).projector() +
                 outcome_subspace(m, 3).projector());
}

Subspace MeasurementSetup::equal_outcome_join(Meas m, const Tolerance& tol) const {
  return join(outcome_subspace(m, 1), outcome_subspace(m, 4), tol);
}

Subspace MeasurementSetup::differing_outcome_join(Meas m,
                                                  const Tolerance& tol) const {
  return join(outcome_subspace(m, 2), outcome_subspace(m, 3), tol);
}

const BooleanAlgebra& OutcomeAlgebras::of(Meas m) const {
  switch (m) {
    case Meas::A: return a;
    case Meas::B: return b;
    case Meas::C: return c;
    case Meas::D: return d;
  }
  return a;
}

OutcomeAlgebras boolean_tables(const Su2Setting& s, const Tolerance& tol) {
  CMatrix generating(4, 4);
  for (int k = 1; k <= 4; ++k) {
    generating.col(k - 1) =
        kron(x_ket(kOutcomePair[k - 1][0]), x_ket(kOutcomePair[k - 1][1]));
  }
  const BooleanAlgebra base = boolean_algebra_from_basis(generating, tol);
  const CMatrix u = s.unitary();
  const CMatrix id = CMatrix::Identity(2, 2);
  return OutcomeAlgebras{base, transport_by_unitary(base, kron(id, u), tol),
                         transport_by_unitary(base, kron(u, id), tol),
                         transport_by_unitary(base, kron(u, u), tol)};
}

ProbabilityTable probability_table(const Su2Setting& s, const Tolerance& tol) {
  const MeasurementSetup setup(s, tol);
  const CVector psi = bell_state();
  ProbabilityTable out;
  out.kappa = chsh_kappa(s);
  out.lambda_val = chsh_lambda(s);

  // Closed-form rows in column order (1,1), (0,1), (1,0), (0,0).
  const std::array<std::array<double, 4>, 4> closed{{
      {0.5, 0.0, 0.0, 0.5},
      {out.kappa, 0.5 - out.kappa, 0.5 - out.kappa, out.kappa},
      {out.kappa, 0.5 - out.kappa, 0.5 - out.kappa, out.kappa},
      {out.lambda_val, 0.5 - out.lambda_val, 0.5 - out.lambda_val, out.lambda_val},
  }};
  // Column order maps to outcome indices (1,1)->1, (0,1)->3, (1,0)->2, (0,0)->4.
  const std::array<int, 4> column_outcome{1, 3, 2, 4};

  for (Meas m : kAllMeas) {
    const auto row = static_cast<std::size_t>(m);
    for (std::size_t col = 0; col < 4; ++col) {
      const Subspace& h = setup.outcome_subspace(m, column_outcome[col]);
      const double direct = (psi.adjoint() * h.projector() * psi)(0, 0).real();
      out.cells[row][col] = direct;
      out.cross_residual =
          std::max(out.cross_residual, std::abs(direct - closed[row][col]));
    }
  }
  return out;
}

double ProbabilityTable::row_sum(Meas m) const {
  const auto& row = cells[static_cast<std::size_t>(m)];
  return row[0] + row[1] + row[2] + row[3];
}

double chsh_lhs(const Su2Setting& s, const Tolerance& tol) {
  const MeasurementSetup setup(s, tol);
  const DensityMatrix rho = bell_density();
  double direct = 0.0;
  for (Meas m : {Meas::A, Meas::B, Meas::C}) {
    direct += gleason_probability(setup.equal_outcome_join(m, tol), rho, tol);
  }
  direct += gleason_probability(setup.differing_outcome_join(Meas::D, tol), rho, tol);
  const double closed = 2.0 + 4.0 * chsh_kappa(s) - 2.0 * chsh_lambda(s);
  if (std::abs(direct - closed) > tol.zero_tol) {
    throw std::runtime_error("chsh_lhs: projector route disagrees with closed form");
  }
  return direct;
}

MeetZeroReport verify_meet_zero(const Su2Setting& s, const Tolerance& tol) {
  const MeasurementSetup setup(s, tol);
  MeetZeroReport out;

  const std::array<std::array<int, 2>, 4> factor_outcomes{{
      {1, 4},  // measurement A: agreement outcomes
      {1, 4},  // measurement B
      {1, 4},  // measurement C
      {2, 3},  // measurement D: disagreement outcomes
  }};
  std::size_t idx = 0;
  for (int i : factor_outcomes[0]) {
    const CMatrix& pa = setup.outcome_subspace(Meas::A, i).projector();
    for (int j : factor_outcomes[1]) {
      const CMatrix pab = pa * setup.outcome_subspace(Meas::B, j).projector();
      for (int k : factor_outcomes[2]) {
        const CMatrix pabc = pab * setup.outcome_subspace(Meas::C, k).projector();
        for (int l : factor_outcomes[3]) {
          const double norm =
              (pabc * setup.outcome_subspace(Meas::D, l).projector()).norm();
          out.product_norms[idx++] = norm;
          out.max_product_norm = std::max(out.max_product_norm, norm);
        }
      }
    }
  }

  Subspace acc = setup.equal_outcome_join(Meas::A, tol);
  acc = meet(acc, setup.equal_outcome_join(Meas::B, tol), tol);
  acc = meet(acc, setup.equal_outcome_join(Meas::C, tol), tol);
  acc = meet(acc, setup.differing_outcome_join(Meas::D, tol), tol);
  out.meet_dimension = acc.dim();

  const std::array<CMatrix, 2> pi = spin_projectors(s);
  out.degenerate = (pi[1] - pi_x(1)).norm() <= tol.zero_tol ||
                   (pi[1] - pi_x(0)).norm() <= tol.zero_tol;
  return out;
}

BoundCheck proposition2_bound(const std::vector<Subspace>& subspaces,
                              const DensityMatrix& rho, const Tolerance& tol) {
  if (subspaces.empty()) {
    throw std::invalid_argument("proposition2_bound: need at least one subspace");
  }
  Subspace acc = subspaces.front();
  for (std::size_t i = 1; i < subspaces.size(); ++i) {
    acc = meet(acc, subspaces[i], tol);
  }
  if (acc.dim() != 0) {
    throw std::invalid_argument(
        "proposition2_bound: common meet is not the zero subspace");
  }
  BoundCheck out;
  for (const Subspace& h : subspaces) {
    out.sum += gleason_probability(h, rho, tol);
  }
  out.bound = static_cast<double>(subspaces.size()) - 1.0;
  out.satisfied = out.sum <= out.bound + tol.zero_tol;
  return out;
}

BooleReport boole_violation(const Su2Setting& s, const Tolerance& tol) {
  const MeasurementSetup setup(s, tol);
  const DensityMatrix rho = bell_density();

  std::vector<Subspace> complements;
  for (Meas m : {Meas::A, Meas::B, Meas::C}) {
    complements.push_back(orthocomplement(setup.equal_outcome_join(m, tol), tol));
  }
  complements.push_back(
      orthocomplement(setup.differing_outcome_join(Meas::D, tol), tol));

  BooleReport out;
  for (const Subspace& h : complements) {
    out.lhs_sum += gleason_probability(h, rho, tol);
  }
  const double closed = 2.0 - 4.0 * chsh_kappa(s) + 2.0 * chsh_lambda(s);
  if (std::abs(out.lhs_sum - closed) > tol.zero_tol) {
    throw std::runtime_error(
        "boole_violation: projector route disagrees with closed form");
  }
  Subspace all = complements[0];
  for (std::size_t i = 1; i < complements.size(); ++i) {
    all = join(all, complements[i], tol);
  }
  out.joint = gleason_probability(all, rho, tol);
  out.violated = out.lhs_sum < 1.0 - tol.zero_tol;
  return out;
}

CMatrix commutator_witness(const Su2Setting& s, const Tolerance& tol) {
  const MeasurementSetup setup(s, tol);
  const CMatrix p7a = setup.equal_outcome_join(Meas::A, tol).projector();
  const CMatrix p7b = setup.equal_outcome_join(Meas::B, tol).projector();
  const CMatrix comm = p7a * p7b - p7b * p7a;

  const std::array<CMatrix, 2> pi = spin_projectors(s);
  CMatrix expected = CMatrix::Zero(4, 4);
  for (int k : {0, 1}) {
    const CMatrix local = pi_x(k) * pi[k] - pi[k] * pi_x(k);
    expected += kron(pi_x(k), local);
  }
  if ((comm - expected).norm() > tol.zero_tol) {
    throw std::runtime_error(
        "commutator_witness: tensor decomposition identity failed");
  }
  return comm;
}

}  // namespace qlds
