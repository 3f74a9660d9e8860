#pragma once

#include <vector>

#include "filiform/algebra.hpp"
#include "filiform/cochain.hpp"
#include "filiform/linalg.hpp"

namespace filiform {

/// dd^* + d^*d on Lambda^q_k with the monomials orthonormal:
/// D_q^T D_q + D_{q-1} D_{q-1}^T. Rationals only (FieldNotOrdered otherwise).
SparseMatrix laplacian_matrix(const GradedAlgebra& alg, int q, int k, const Field& field = Field::rationals());

/// Laplacian applied to a homogeneous cochain.
Cochain laplacian(const GradedAlgebra& alg, const Cochain& c);

/// Kernel basis of the Laplacian cell.
std::vector<Cochain> harmonic_basis(const GradedAlgebra& alg, int q, int k, const Field& field = Field::rationals());

/// For m0: Delta(e^1 ^ xi) = e^1 ^ D1 D1^*(xi) and Delta(eta) = D1^* D1(eta)
/// when eta has no e^1. Throws ShapeMismatch for mixed or inhomogeneous forms.
bool m0_structure_check(const Cochain& form);

}  // namespace filiform
