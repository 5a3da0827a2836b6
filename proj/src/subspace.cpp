#include "qlds/subspace.hpp"

#include <utility>

namespace qlds {

namespace {

CMatrix projector_of(const CMatrix& basis, int ambient_dim) {
  if (basis.cols() == 0) {
    return CMatrix::Zero(ambient_dim, ambient_dim);
  }
  return basis * basis.adjoint();
}

}  // namespace

Subspace::Subspace(CMatrix basis, CMatrix projector)
    : basis_(std::move(basis)), projector_(std::move(projector)) {}

Subspace Subspace::zero(int ambient_dim) {
  if (ambient_dim <= 0) {
    throw std::invalid_argument("Subspace: ambient dimension must be positive");
  }
  return Subspace(CMatrix::Zero(ambient_dim, 0),
                  CMatrix::Zero(ambient_dim, ambient_dim));
}

Subspace Subspace::full(int ambient_dim) {
  if (ambient_dim <= 0) {
    throw std::invalid_argument("Subspace: ambient dimension must be positive");
  }
  return Subspace(CMatrix::Identity(ambient_dim, ambient_dim),
                  CMatrix::Identity(ambient_dim, ambient_dim));
}

Subspace Subspace::from_span(const CMatrix& vectors, const Tolerance& tol) {
  if (vectors.rows() == 0) {
    throw std::invalid_argument("Subspace: ambient dimension must be positive");
  }
  CMatrix basis = orthonormal_column_basis(vectors, tol);
  CMatrix projector = projector_of(basis, static_cast<int>(vectors.rows()));
  return Subspace(std::move(basis), std::move(projector));
}

Subspace Subspace::from_orthonormal_basis(const CMatrix& basis,
                                          const Tolerance& tol) {
  if (basis.rows() == 0) {
    throw std::invalid_argument("Subspace: ambient dimension must be positive");
  }
  require_finite(basis, "Subspace");
  const CMatrix gram = basis.adjoint() * basis;
  if (frobenius_distance(gram, CMatrix::Identity(basis.cols(), basis.cols())) >
      tol.zero_tol) {
    throw std::invalid_argument("Subspace: columns are not orthonormal");
  }
  CMatrix projector = projector_of(basis, static_cast<int>(basis.rows()));
  return Subspace(basis, std::move(projector));
}

Subspace Subspace::from_vector(const CVector& v, const Tolerance& tol) {
  const double n = v.norm();
  if (n <= tol.zero_tol) {
    throw std::invalid_argument("Subspace: vector is numerically zero");
  }
  CMatrix basis = v / n;
  CMatrix projector = projector_of(basis, static_cast<int>(v.size()));
  return Subspace(std::move(basis), std::move(projector));
}

bool Subspace::equals(const Subspace& other, const Tolerance& tol) const {
  if (ambient_dim() != other.ambient_dim()) return false;
  return frobenius_distance(projector_, other.projector_) <= tol.zero_tol;
}

namespace {

void require_same_space(const Subspace& h1, const Subspace& h2, const char* op) {
  if (h1.ambient_dim() != h2.ambient_dim()) {
    throw std::invalid_argument(std::string(op) + ": ambient dimensions differ");
  }
}

}  // namespace

Subspace join(const Subspace& h1, const Subspace& h2, const Tolerance& tol) {
  require_same_space(h1, h2, "join");
  const int d = h1.ambient_dim();
  CMatrix stacked(d, h1.dim() + h2.dim());
  stacked << h1.basis(), h2.basis();
  if (stacked.cols() == 0) return Subspace::zero(d);
  return Subspace::from_span(stacked, tol);
}

Subspace orthocomplement(const Subspace& h, const Tolerance&) {
  const int d = h.ambient_dim();
  const int k = h.dim();
  if (k == 0) return Subspace::full(d);
  if (k == d) return Subspace::zero(d);
  // Full SVD of the orthonormal basis: the left singular vectors beyond the
  // first k span the kernel of the projector, with exactly d - k columns.
  Eigen::JacobiSVD<CMatrix> svd(h.basis(), Eigen::ComputeFullU);
  return Subspace::from_orthonormal_basis(svd.matrixU().rightCols(d - k));
}

Subspace meet(const Subspace& h1, const Subspace& h2, const Tolerance& tol) {
  require_same_space(h1, h2, "meet");
  return orthocomplement(
      join(orthocomplement(h1, tol), orthocomplement(h2, tol), tol), tol);
}

bool leq(const Subspace& h1, const Subspace& h2, const Tolerance& tol) {
  require_same_space(h1, h2, "leq");
  return (h2.projector() * h1.projector() - h1.projector()).norm() <= tol.zero_tol;
}

bool commutes(const Subspace& h1, const Subspace& h2, const Tolerance& tol) {
  require_same_space(h1, h2, "commutes");
  const Subspace inside = meet(h1, h2, tol);
  const Subspace outside = meet(h1, orthocomplement(h2, tol), tol);
  return join(inside, outside, tol).equals(h1, tol);
}

Subspace BooleanAlgebra::element(std::uint64_t mask) const {
  if (mask >= element_count()) {
    throw std::invalid_argument("BooleanAlgebra: mask out of range");
  }
  const int d = ambient_dim();
  int count = 0;
  for (int i = 0; i < d; ++i) count += static_cast<int>((mask >> i) & 1u);
  CMatrix selected(d, count);
  int col = 0;
  for (int i = 0; i < d; ++i) {
    if ((mask >> i) & 1u) selected.col(col++) = basis_.col(i);
  }
  if (count == 0) return Subspace::zero(d);
  return Subspace::from_orthonormal_basis(selected);
}

std::vector<Subspace> BooleanAlgebra::all_elements() const {
  if (ambient_dim() > 12) {
    throw std::invalid_argument(
        "BooleanAlgebra: refusing to materialize more than 2^12 elements");
  }
  std::vector<Subspace> out;
  out.reserve(element_count());
  for (std::uint64_t mask = 0; mask < element_count(); ++mask) {
    out.push_back(element(mask));
  }
  return out;
}

BooleanAlgebra boolean_algebra_from_basis(const CMatrix& vectors,
                                          const Tolerance& tol) {
  if (vectors.rows() == 0 || vectors.rows() != vectors.cols()) {
    throw std::invalid_argument(
        "boolean_algebra_from_basis: need d vectors spanning C^d");
  }
  require_finite(vectors, "boolean_algebra_from_basis");
  const CMatrix gram = vectors.adjoint() * vectors;
  if (frobenius_distance(gram, CMatrix::Identity(vectors.cols(), vectors.cols())) >
      tol.zero_tol) {
    throw std::invalid_argument(
        "boolean_algebra_from_basis: vectors are not an orthonormal basis");
  }
  return BooleanAlgebra(vectors);
}

BooleanAlgebra transport_by_unitary(const BooleanAlgebra& algebra, const CMatrix& u,
                                    const Tolerance& tol) {
  if (u.rows() != u.cols() || u.rows() != algebra.ambient_dim()) {
    throw std::invalid_argument("transport_by_unitary: shape mismatch");
  }
  require_finite(u, "transport_by_unitary");
  const CMatrix gram = u.adjoint() * u;
  if (frobenius_distance(gram, CMatrix::Identity(u.cols(), u.cols())) >
      tol.zero_tol) {
    throw std::invalid_argument("transport_by_unitary: matrix is not unitary");
  }
  return BooleanAlgebra(u * algebra.generating_basis());
}

}  // namespace qlds
