#pragma once

#include <cstdint>
#include <vector>

#include "qlds/linalg.hpp"

namespace qlds {

// Closed subspace of C^d, stored as an orthonormal column basis plus the
// cached projector basis * basis^dagger. The zero subspace has a d x 0 basis.
class Subspace {
 public:
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  // Span of arbitrary (possibly dependent, possibly zero) column vectors.
  static Subspace from_span(const CMatrix& vectors,
                            const Tolerance& tol = session_tolerance());

  // Wraps columns that are already orthonormal; validates B^dagger B = I.
  static Subspace from_orthonormal_basis(const CMatrix& basis,
                                         const Tolerance& tol = session_tolerance());

  // One-dimensional span of a nonzero vector.
  static Subspace from_vector(const CVector& v,
                              const Tolerance& tol = session_tolerance());

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const CMatrix& basis() const { return basis_; }
  const CMatrix& projector() const { return projector_; }

  // Equality of subspaces is projector distance within zero_tol.
  bool equals(const Subspace& other,
              const Tolerance& tol = session_tolerance()) const;

 private:
  Subspace(CMatrix basis, CMatrix projector);
  CMatrix basis_;
  CMatrix projector_;
};

// Lattice operations. meet is derived from join and complement, so the whole
// lattice rests on one rank decision.
Subspace join(const Subspace& h1, const Subspace& h2,
              const Tolerance& tol = session_tolerance());
Subspace meet(const Subspace& h1, const Subspace& h2,
              const Tolerance& tol = session_tolerance());
Subspace orthocomplement(const Subspace& h,
                         const Tolerance& tol = session_tolerance());

// Containment h1 <= h2, decided as |P2 P1 - P1|_F <= zero_tol.
bool leq(const Subspace& h1, const Subspace& h2,
         const Tolerance& tol = session_tolerance());

// Compatibility: h1 = (h1 ^ h2) v (h1 ^ h2-perp), evaluated with the lattice
// operations above. Agrees with commutation of the two projectors.
bool commutes(const Subspace& h1, const Subspace& h2,
              const Tolerance& tol = session_tolerance());

// The 2^d-element Boolean algebra generated by an orthonormal basis of C^d.
// Elements are addressed by bitmask over generating vectors; element(mask) is
// exact (selected columns, no refactoring).
class BooleanAlgebra {
 public:
  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  std::uint64_t element_count() const { return std::uint64_t{1} << ambient_dim(); }
  const CMatrix& generating_basis() const { return basis_; }

  Subspace element(std::uint64_t mask) const;

  // All 2^d elements, indexed by mask. Guarded to d <= 12.
  std::vector<Subspace> all_elements() const;

  friend BooleanAlgebra boolean_algebra_from_basis(const CMatrix&, const Tolerance&);
  friend BooleanAlgebra transport_by_unitary(const BooleanAlgebra&, const CMatrix&,
                                             const Tolerance&);

 private:
  explicit BooleanAlgebra(CMatrix basis) : basis_(std::move(basis)) {}
  CMatrix basis_;
};

// Validates that the d columns are an orthonormal basis of C^d.
BooleanAlgebra boolean_algebra_from_basis(const CMatrix& vectors,
                                          const Tolerance& tol = session_tolerance());

// Image algebra with generating basis u * B. u must be unitary.
BooleanAlgebra transport_by_unitary(const BooleanAlgebra& algebra, const CMatrix& u,
                                    const Tolerance& tol = session_tolerance());

}  // namespace qlds
