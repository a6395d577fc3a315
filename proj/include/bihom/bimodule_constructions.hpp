#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bihom/bimodule.hpp"

namespace bihom {

// The algebra acting on itself: carrier A, twists alpha and beta, both
// actions the product.
BimodulePtr regular_bimodule(const AlgebraPtr& A);

// A two-sided ideal as a bimodule: the carrier is the ideal's own basis,
// actions and twists are restrictions written in ideal coordinates.  Throws
// NotAnIdeal when the subspace fails closure or absorption.
BimodulePtr ideal_bimodule(const AlgebraPtr& A, const Subspace& I);

// Pull the target of a surjective algebra morphism f: A -> B back to an
// A-bimodule: carrier B, a.b = f(a)b and b.a = bf(a), twists those of B.
// Throws NotAMorphism / NotSurjective.
BimodulePtr bimodule_via_surjection(const AlgebraMorphism& f);

// Precompose an alternative bimodule's actions with alpha^a_pow beta^b_pow on
// the algebra slot; carrier, twists and host stay fixed.  Requires the
// alternative-bimodule check to pass (PrereqFailed).
BimodulePtr shift_bimodule(const BimodulePtr& V, std::size_t a_pow, std::size_t b_pow);

// Twist by endomorphisms: the host becomes yau_twist(A, alpha2, beta2), the
// carrier keeps its space with twists phi*phi2 and psi*psi2, and the actions
// become rho_l(alpha2 x, psi2 v) and rho_r(phi2 v, beta2 x).  The module maps
// must commute pairwise with the carrier twists (NonCommutingMaps) and
// intertwine the actions against alpha2/beta2 (IntertwiningFailed); the host
// twist inherits its own morphism and commutation checks.
BimodulePtr twist_bimodule(const BimodulePtr& V, const LinearMap& alpha2, const LinearMap& beta2,
                           const LinearMap& phi2, const LinearMap& psi2);

// The power form of the twist: actions rho_l(alpha^{n+r} beta^m x, psi^q v)
// and rho_r(phi^p v, alpha^n beta^{m+s} x) over the host yau_twist(A,
// alpha^r, beta^s), with carrier twists phi^{p+1} and psi^{q+1}.  The mixed
// powers are only compatible when phi^p/psi^q intertwine the actions against
// alpha^r/beta^s, so those four conditions are verified (IntertwiningFailed).
BimodulePtr twist_bimodule_powers(const BimodulePtr& V, std::size_t n, std::size_t m, std::size_t p,
                                  std::size_t q, std::size_t r, std::size_t s);

// Deform along a weight-zero Rota-Baxter operator R on the host: the host
// becomes rota_baxter_deformation(A, R) and the actions become rho_l(R x, v)
// and rho_r(v, R x); carrier and twists stay fixed.
BimodulePtr rb_twist_bimodule(const BimodulePtr& V, const LinearMap& R);

// Precompose a Jordan bimodule's left action with alpha^k and its right
// action with beta^k; everything else stays fixed.  Requires the
// Jordan-bimodule check to pass (PrereqFailed).
BimodulePtr jordan_shift_bimodule(const BimodulePtr& V, std::size_t k);

// Start from a bimodule over a classical Jordan algebra (identity twists on
// host and carrier) and install commuting structure maps: the host becomes
// yau_twist(A, alpha, beta), the carrier twists become phi and psi, and the
// actions become rho_l(alpha x, psi v) and rho_r(phi v, beta x).  The maps
// must intertwine the classical actions (IntertwiningFailed).
BimodulePtr jordan_deform_bimodule(const BimodulePtr& V, const LinearMap& alpha, const LinearMap& beta,
                                   const LinearMap& phi, const LinearMap& psi);

// Power form of the deformation: actions rho_l(alpha^{k+1} x, psi v) and
// rho_r(phi v, beta^{k+1} x) over the same twisted host.
BimodulePtr jordan_deform_bimodule_powers(const BimodulePtr& V, const LinearMap& alpha,
                                          const LinearMap& beta, const LinearMap& phi,
                                          const LinearMap& psi, std::size_t k);

// Merge a left-special action rho1 and a right-special action rho2 on the
// same carrier into one bimodule over the (unchanged) host:
//   x.v = rho1(x, v) + rho2(psi phi^-1 v, alpha beta^-1 x)
//   v.x = rho1(beta alpha^-1 x, phi psi^-1 v) + rho2(v, x).
// The host must be regular (NotRegular) and BiHom-commutative Jordan
// (PrereqFailed); phi and psi must both be invertible (PhiPsiNotInvertible);
// rho1/rho2 must pass the left/right special checks and commute as operators
// (PrereqFailed).
BimodulePtr special_pair_to_jordan_bimodule(const AlgebraPtr& A, std::size_t mdim, const LinearMap& phi,
                                            const LinearMap& psi, const std::vector<Scalar>& rho1,
                                            const std::vector<Scalar>& rho2);

// The algebra on A + V with (a, u)(b, v) = (ab, a.v + u.b), twists
// block_diag(alpha, phi) and block_diag(beta, psi).  The selector names the
// variety being extended: "alternative" requires an alternative host and
// bimodule, "jordan" a Jordan bimodule (PrereqFailed); anything else is an
// InvalidArgument.  V embeds as a square-zero two-sided ideal and the
// quotient by it recovers A.
AlgebraPtr split_null_extension(const AlgebraPtr& A, const BimodulePtr& V, const std::string& selector);

// Same carrier, twists and action tensors over a different host algebra of
// the same dimension and context; the constructor re-checks that the twists
// still intertwine the actions against the new host's maps.
BimodulePtr rehost_bimodule(const BimodulePtr& V, const AlgebraPtr& newHost);

}  // namespace bihom
