#include "qlds/finite_qm.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qlds {

namespace {

// Representative of k mod d in [0, d).
long long mod_d(long long k, int d) {
  long long r = k % d;
  return r < 0 ? r + d : r;
}

}  // namespace

FiniteSystem::FiniteSystem(int d) : d_(d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument(
        "FiniteSystem: dimension must be odd and at least 3 (2 must be "
        "invertible mod d)");
  }
}

Complex FiniteSystem::omega(long long k) const {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(mod_d(k, d_)) / d_;
  return std::polar(1.0, angle);
}

CMatrix FiniteSystem::z_op() const {
  CMatrix z = CMatrix::Zero(d_, d_);
  for (int j = 0; j < d_; ++j) z(j, j) = omega(j);
  return z;
}

CMatrix FiniteSystem::x_op() const {
  CMatrix x = CMatrix::Zero(d_, d_);
  for (int k = 0; k < d_; ++k) x((k + 1) % d_, k) = 1.0;
  return x;
}

CMatrix FiniteSystem::fourier() const {
  CMatrix f(d_, d_);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d_));
  for (int n = 0; n < d_; ++n) {
    for (int m = 0; m < d_; ++m) {
      f(n, m) = scale * omega(static_cast<long long>(n) * m);
    }
  }
  return f;
}

CMatrix FiniteSystem::displacement(long long alpha, long long beta) const {
  const long long a = mod_d(alpha, d_);
  const long long b = mod_d(beta, d_);
  // Entry (j, k): omega(alpha j - 2^{-1} alpha beta) on the diagonal j = k + beta.
  CMatrix out = CMatrix::Zero(d_, d_);
  const long long phase_shift = mod_d(-static_cast<long long>(two_inverse()) * a * b, d_);
  for (int k = 0; k < d_; ++k) {
    const long long j = mod_d(k + b, d_);
    out(j, k) = omega(a * j + phase_shift);
  }
  return out;
}

CVector FiniteSystem::position_state(int n) const {
  if (n < 0 || n >= d_) {
    throw std::invalid_argument("position_state: index out of range");
  }
  CVector v = CVector::Zero(d_);
  v(n) = 1.0;
  return v;
}

CVector FiniteSystem::momentum_state(int m) const {
  if (m < 0 || m >= d_) {
    throw std::invalid_argument("momentum_state: index out of range");
  }
  return fourier().col(m);
}

CoherentFamily::CoherentFamily(const FiniteSystem& system, const CVector& fiducial,
                               const Tolerance& tol)
    : system_(system), fiducial_(fiducial) {
  const int d = system_.dim();
  if (fiducial_.size() != d) {
    throw std::invalid_argument("CoherentFamily: fiducial has wrong dimension");
  }
  require_finite(fiducial_, "CoherentFamily");
  const double n = fiducial_.norm();
  if (std::abs(n - 1.0) > tol.zero_tol) {
    throw std::invalid_argument("CoherentFamily: fiducial must be normalized");
  }
  fiducial_ /= n;

  const auto spread = [&](const CVector& components) {
    int count = 0;
    for (int i = 0; i < d; ++i) {
      if (std::abs(components(i)) > tol.zero_tol) ++count;
    }
    return count;
  };
  if (spread(fiducial_) < 2) {
    throw std::invalid_argument(
        "CoherentFamily: fiducial is a position state; displacements would "
        "collapse onto the position basis");
  }
  if (spread(system_.fourier().adjoint() * fiducial_) < 2) {
    throw std::invalid_argument(
        "CoherentFamily: fiducial is a momentum state; displacements would "
        "collapse onto the momentum basis");
  }

  states_.reserve(static_cast<std::size_t>(d) * d);
  for (int alpha = 0; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      states_.push_back(system_.displacement(alpha, beta) * fiducial_);
    }
  }
}

const CVector& CoherentFamily::state(int alpha, int beta) const {
  const int d = system_.dim();
  const auto a = static_cast<std::size_t>(((alpha % d) + d) % d);
  const auto b = static_cast<std::size_t>(((beta % d) + d) % d);
  return states_[a * static_cast<std::size_t>(d) + b];
}

Subspace CoherentFamily::subspace(int alpha, int beta) const {
  return Subspace::from_vector(state(alpha, beta));
}

Complex CoherentFamily::overlap(int alpha, int beta, int gamma, int delta) const {
  const int d = system_.dim();
  const long long a = static_cast<long long>(alpha);
  const long long b = static_cast<long long>(beta);
  const long long g = static_cast<long long>(gamma);
  const long long dl = static_cast<long long>(delta);
  const long long inv2 = system_.two_inverse();
  Complex sum = 0.0;
  for (int n = 0; n < d; ++n) {
    const int shifted = static_cast<int>((((n + dl - b) % d) + d) % d);
    sum += std::conj(fiducial_(shifted)) * fiducial_(n) *
           system_.omega(static_cast<long long>(n) * (g - a));
  }
  return system_.omega(inv2 * (a * b + g * dl) - a * dl) * sum;
}

Complex CoherentFamily::overlap_direct(int alpha, int beta, int gamma,
                                       int delta) const {
  return state(alpha, beta).dot(state(gamma, delta));
}

CMatrix CoherentFamily::join_projector(int alpha, int beta, int gamma, int delta,
                                       const Tolerance& tol) const {
  const CVector& psi1 = state(alpha, beta);
  const CVector& psi2 = state(gamma, delta);
  const Complex lambda = overlap(alpha, beta, gamma, delta);
  const double residual = 1.0 - std::norm(lambda);
  if (residual <= tol.zero_tol) {
    throw std::invalid_argument("join_projector: states coincide, span is flat");
  }
  const CVector s = (psi2 - lambda * psi1) / std::sqrt(residual);
  return psi1 * psi1.adjoint() + s * s.adjoint();
}

AdditivityOperator CoherentFamily::pair_additivity(int alpha, int beta, int gamma,
                                                   int delta,
                                                   const Tolerance& tol) const {
  const int d = system_.dim();
  const bool same = ((alpha - gamma) % d + d) % d == 0 && ((beta - delta) % d + d) % d == 0;
  if (same) {
    throw std::invalid_argument("pair_additivity: indices coincide");
  }
  const Complex lambda = overlap(alpha, beta, gamma, delta);
  const double denom = 1.0 - std::norm(lambda);
  if (denom <= tol.zero_tol) {
    throw std::invalid_argument("pair_additivity: unit overlap, join degenerates");
  }
  const CVector& psi1 = state(alpha, beta);
  const CVector& psi2 = state(gamma, delta);
  const CMatrix p1 = psi1 * psi1.adjoint();
  const CMatrix p2 = psi2 * psi2.adjoint();
  const CMatrix m =
      (std::norm(lambda) * (p1 + p2) - (p1 * p2 + p2 * p1)) / denom;
  HermitianEigen eig = hermitian_eigen(m, tol);
  return AdditivityOperator{m, std::move(eig.eigenvalues),
                            std::move(eig.eigenvectors)};
}

double CoherentFamily::resolution_of_identity_residual() const {
  const int d = system_.dim();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const CVector& psi : states_) {
    sum += psi * psi.adjoint();
  }
  sum /= static_cast<double>(d);
  return frobenius_distance(sum, CMatrix::Identity(d, d));
}

CVector random_fiducial(int d, std::uint64_t seed) {
  if (d < 1) {
    throw std::invalid_argument("random_fiducial: dimension must be positive");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(d);
  for (int i = 0; i < d; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  const double n = v.norm();
  if (n == 0.0) return random_fiducial(d, seed + 1);
  return v / n;
}

}  // namespace qlds
