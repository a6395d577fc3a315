#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"
#include "bihom/report.hpp"

namespace bihom {

class BiHomAlgebra;
using AlgebraPtr = std::shared_ptr<const BiHomAlgebra>;

// A finite-dimensional algebra with two commuting twist maps: a carrier of
// dimension n, a bilinear product given by structure constants, and linear
// endomorphisms alpha and beta with alpha.beta = beta.alpha.  Elements are
// plain coordinate vectors (Vec) of length n.
class BiHomAlgebra {
public:
    // mu is flattened so that entry (i*dim + j)*dim + k is the coefficient of
    // e_k in e_i * e_j.  Throws NonCommutingMaps when alpha and beta do not
    // commute and DimensionMismatch on shape violations.
    BiHomAlgebra(std::string label, ContextPtr context, std::size_t dim, std::vector<Scalar> mu,
                 LinearMap alpha, LinearMap beta);

    static AlgebraPtr make(std::string label, ContextPtr context, std::size_t dim, std::vector<Scalar> mu,
                           LinearMap alpha, LinearMap beta);

    const std::string& label() const { return label_; }
    const ContextPtr& context() const { return context_; }
    std::size_t dim() const { return dim_; }
    const LinearMap& alpha() const { return alpha_; }
    const LinearMap& beta() const { return beta_; }
    const std::vector<Scalar>& mu_tensor() const { return mu_; }

    const Scalar& mu(std::size_t i, std::size_t j, std::size_t k) const {
        return mu_[(i * dim_ + j) * dim_ + k];
    }
    // Structure-constant column: the element e_i * e_j.
    Vec basis_product(std::size_t i, std::size_t j) const;

    Vec multiply(const Vec& x, const Vec& y) const;
    // as(x,y,z) = (x*y) * beta(z) - alpha(x) * (y*z).
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;

    Vec zero() const { return zero_vec(context_, dim_); }
    Vec basis(std::size_t i) const { return unit_vec(context_, dim_, i); }

    // Same algebra over an extended parameter context (old parameter i lands
    // at position where[i]); used for checks on generic symbolic elements.
    BiHomAlgebra embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const;

private:
    std::string label_;
    ContextPtr context_;
    std::size_t dim_;
    std::vector<Scalar> mu_;
    LinearMap alpha_;
    LinearMap beta_;
};

// Well-formedness verdict: twist commutation plus multiplicativity of alpha
// and beta over all basis pairs.
CheckReport validate(const BiHomAlgebra& A);

// Closure of the spanned subspace under the product and both twist maps.
CheckReport is_subalgebra(const BiHomAlgebra& A, const Subspace& H);

// Closure under both twists plus absorption: a*h and h*a stay in H for every
// basis element a and spanning vector h.
CheckReport is_two_sided_ideal(const BiHomAlgebra& A, const Subspace& H);

// Same algebra up to content: equal contexts, dimensions, structure tensors
// and twist maps (pointer equality short-circuits).
bool same_algebra(const AlgebraPtr& x, const AlgebraPtr& y);

// A linear map between two algebras; map is target.dim x source.dim.
struct AlgebraMorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    LinearMap map;
};

AlgebraMorphism make_morphism(AlgebraPtr source, AlgebraPtr target, LinearMap map);

// f(x*y) = f(x)*f(y) over basis pairs plus intertwining with both twists.
CheckReport check_morphism(const AlgebraMorphism& m);

// Span of {(e_i, f(e_i))} inside source + target coordinates; the caller
// pairs it with the direct sum of the two algebras.
Subspace graph_subspace(const AlgebraMorphism& m);

}  // namespace bihom
