#pragma once

#include <utility>

#include "bihom/algebra.hpp"

namespace bihom {

struct QuotientResult {
    AlgebraPtr algebra;
    AlgebraMorphism projection;  // from the original algebra onto the quotient
};

// Quotient by a two-sided ideal: the basis is complement_basis(I), structure
// constants multiply representatives and reduce modulo I, and the twists are
// the induced maps.  Throws NotAnIdeal.
QuotientResult quotient_with_projection(const AlgebraPtr& A, const Subspace& I);
AlgebraPtr quotient(const AlgebraPtr& A, const Subspace& I);

// Blockwise sum: componentwise product, block-diagonal twists, cross-block
// products zero.
AlgebraPtr direct_sum(const AlgebraPtr& A, const AlgebraPtr& B);

// Product algebra on basis e_i (x) f_j (flattened i*dim(B)+j) with
// mu((a1,x1),(a2,x2)) = mu_A(a1,a2) (x) mu_B(x1,x2) and Kronecker twists.
// The first factor must be BiHom-associative and the second BiHom-alternative
// (PrereqFailed otherwise).
AlgebraPtr tensor_product(const AlgebraPtr& Aassoc, const AlgebraPtr& Aalt);

// Twist by two multiplicative endomorphisms: new product mu(a'(x), b'(y)),
// twists alpha*a' and beta*b'.  Both maps must be multiplicative for mu
// (NotAMorphism) and all four maps must commute pairwise (NonCommutingMaps).
AlgebraPtr yau_twist(const AlgebraPtr& A, const LinearMap& alpha2, const LinearMap& beta2);

// yau_twist by the k-th powers of the algebra's own twist maps.
AlgebraPtr power_twist(const AlgebraPtr& A, std::size_t k);

// Deformed product mu_R(x,y) = mu(R(x),y) + mu(x,R(y)) for a weight-0
// Rota-Baxter operator commuting with both twists (NotRotaBaxter,
// NonCommutingMaps); twists unchanged.
AlgebraPtr rota_baxter_deformation(const AlgebraPtr& A, const LinearMap& R);

// Symmetrized product mu'(x,y) = mu(x,y) + mu(ainv.b(y), binv.a(x)) on a
// regular algebra (NotRegular) that is BiHom-associative or at least
// BiHom-alternative (PrereqFailed); twists unchanged.
AlgebraPtr plus_algebra(const AlgebraPtr& A);

}  // namespace bihom
