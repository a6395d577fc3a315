#include "bihom/constructions.hpp"

#include <utility>

#include "bihom/checks.hpp"
#include "bihom/error.hpp"

namespace bihom {

QuotientResult quotient_with_projection(const AlgebraPtr& A, const Subspace& I) {
    CheckReport ideal = is_two_sided_ideal(*A, I);
    if (!ideal.pass)
        throw Error("NotAnIdeal", "subspace is not a two-sided ideal of '" + A->label() +
                                      "' (first failure: " + ideal.witnesses.front().equation + " at " +
                                      ideal.witnesses.front().where() + ")");
    const ContextPtr& ctx = A->context();
    const std::size_t n = A->dim();
    const std::vector<Vec> comp = complement_basis(I);
    const std::size_t q = comp.size();

    // Change of basis [complement | ideal]: the first q coordinates of
    // P^{-1} v are the coset coordinates of v.
    std::vector<Vec> columns = comp;
    for (const Vec& v : I.basis()) columns.push_back(v);
    LinearMap p_inv = mat_inverse(LinearMap::from_columns(ctx, n, columns));
    auto project = [&](const Vec& v) {
        Vec full = p_inv.apply(v);
        return Vec(full.begin(), full.begin() + q);
    };

    std::vector<Scalar> mu;
    mu.reserve(q * q * q);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            Vec prod = project(A->multiply(comp[i], comp[j]));
            mu.insert(mu.end(), prod.begin(), prod.end());
        }
    }
    std::vector<Vec> alpha_cols, beta_cols;
    for (std::size_t i = 0; i < q; ++i) {
        alpha_cols.push_back(project(A->alpha().apply(comp[i])));
        beta_cols.push_back(project(A->beta().apply(comp[i])));
    }
    AlgebraPtr Q = BiHomAlgebra::make("quotient(" + A->label() + ")", ctx, q, std::move(mu),
                                      LinearMap::from_columns(ctx, q, alpha_cols),
                                      LinearMap::from_columns(ctx, q, beta_cols));
    LinearMap proj(ctx, q, n);
    for (std::size_t r = 0; r < q; ++r) {
        for (std::size_t c = 0; c < n; ++c) proj.set(r, c, p_inv.at(r, c));
    }
    return QuotientResult{Q, make_morphism(A, Q, std::move(proj))};
}

AlgebraPtr quotient(const AlgebraPtr& A, const Subspace& I) {
    return quotient_with_projection(A, I).algebra;
}

AlgebraPtr direct_sum(const AlgebraPtr& A, const AlgebraPtr& B) {
    require_same_context(A->context(), B->context());
    const ContextPtr& ctx = A->context();
    const std::size_t na = A->dim(), nb = B->dim(), n = na + nb;
    std::vector<Scalar> mu(n * n * n, Scalar(ctx));
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t k = 0; k < na; ++k) mu[(i * n + j) * n + k] = A->mu(i, j, k);
        }
    }
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < nb; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                mu[((na + i) * n + (na + j)) * n + (na + k)] = B->mu(i, j, k);
            }
        }
    }
    return BiHomAlgebra::make("sum(" + A->label() + ", " + B->label() + ")", ctx, n, std::move(mu),
                              block_diag(A->alpha(), B->alpha()), block_diag(A->beta(), B->beta()));
}

AlgebraPtr tensor_product(const AlgebraPtr& Aassoc, const AlgebraPtr& Aalt) {
    require_same_context(Aassoc->context(), Aalt->context());
    if (!check_bihom_associative(*Aassoc).pass)
        throw Error("PrereqFailed", "tensor product requires an associative first factor; '" +
                                        Aassoc->label() + "' is not");
    if (!check_left_alternative(*Aalt).pass || !check_right_alternative(*Aalt).pass)
        throw Error("PrereqFailed", "tensor product requires an alternative second factor; '" +
                                        Aalt->label() + "' is not");
    const ContextPtr& ctx = Aassoc->context();
    const std::size_t na = Aassoc->dim(), nb = Aalt->dim(), n = na * nb;
    std::vector<Scalar> mu(n * n * n, Scalar(ctx));
    auto flat = [nb](std::size_t i, std::size_t j) { return i * nb + j; };
    for (std::size_t i1 = 0; i1 < na; ++i1) {
        for (std::size_t j1 = 0; j1 < nb; ++j1) {
            for (std::size_t i2 = 0; i2 < na; ++i2) {
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    const std::size_t row = flat(i1, j1), col = flat(i2, j2);
                    for (std::size_t k = 0; k < na; ++k) {
                        const Scalar& ca = Aassoc->mu(i1, i2, k);
                        if (ca.is_zero()) continue;
                        for (std::size_t l = 0; l < nb; ++l) {
                            const Scalar& cb = Aalt->mu(j1, j2, l);
                            if (cb.is_zero()) continue;
                            mu[(row * n + col) * n + flat(k, l)] = ca * cb;
                        }
                    }
                }
            }
        }
    }
    return BiHomAlgebra::make("tensor(" + Aassoc->label() + ", " + Aalt->label() + ")", ctx, n,
                              std::move(mu), mat_kron(Aassoc->alpha(), Aalt->alpha()),
                              mat_kron(Aassoc->beta(), Aalt->beta()));
}

namespace {

void require_multiplicative(const BiHomAlgebra& A, const LinearMap& f, const char* name) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
        for (std::size_t j = 0; j < A.dim(); ++j) {
            Vec lhs = f.apply(A.basis_product(i, j));
            Vec rhs = A.multiply(f.column(i), f.column(j));
            if (!vec_eq(lhs, rhs))
                throw Error("NotAMorphism", std::string(name) + " is not multiplicative on '" + A.label() +
                                                "' at basis pair (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ")");
        }
    }
}

}  // namespace

AlgebraPtr yau_twist(const AlgebraPtr& A, const LinearMap& alpha2, const LinearMap& beta2) {
    require_same_context(A->context(), alpha2.context());
    require_same_context(A->context(), beta2.context());
    const std::size_t n = A->dim();
    if (alpha2.rows() != n || alpha2.cols() != n || beta2.rows() != n || beta2.cols() != n)
        throw Error("DimensionMismatch", "twist maps must be " + std::to_string(n) + "x" + std::to_string(n));
    const struct {
        const char *xn, *yn;
        const LinearMap *x, *y;
    } pairs[] = {
        {"alpha", "alpha'", &A->alpha(), &alpha2}, {"alpha", "beta'", &A->alpha(), &beta2},
        {"beta", "alpha'", &A->beta(), &alpha2},   {"beta", "beta'", &A->beta(), &beta2},
        {"alpha'", "beta'", &alpha2, &beta2},
    };
    for (const auto& p : pairs) {
        if (!mat_commute(*p.x, *p.y))
            throw Error("NonCommutingMaps", std::string(p.xn) + " and " + p.yn + " do not commute on '" +
                                                A->label() + "'");
    }
    require_multiplicative(*A, alpha2, "alpha'");
    require_multiplicative(*A, beta2, "beta'");

    std::vector<Scalar> mu;
    mu.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ai = alpha2.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = A->multiply(ai, beta2.column(j));
            mu.insert(mu.end(), prod.begin(), prod.end());
        }
    }
    return BiHomAlgebra::make("twist(" + A->label() + ")", A->context(), n, std::move(mu),
                              mat_compose(A->alpha(), alpha2), mat_compose(A->beta(), beta2));
}

AlgebraPtr power_twist(const AlgebraPtr& A, std::size_t k) {
    return yau_twist(A, mat_pow(A->alpha(), k), mat_pow(A->beta(), k));
}

AlgebraPtr rota_baxter_deformation(const AlgebraPtr& A, const LinearMap& R) {
    CheckReport rb = check_rota_baxter(*A, R, Scalar(A->context()));
    if (!rb.pass)
        throw Error("NotRotaBaxter", "operator fails the weight-0 identity on '" + A->label() +
                                         "' at " + rb.witnesses.front().where());
    if (!mat_commute(R, A->alpha()) || !mat_commute(R, A->beta()))
        throw Error("NonCommutingMaps", "operator must commute with both twist maps of '" + A->label() + "'");
    const std::size_t n = A->dim();
    std::vector<Scalar> mu;
    mu.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ri = R.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = vec_add(A->multiply(ri, A->basis(j)), A->multiply(A->basis(i), R.column(j)));
            mu.insert(mu.end(), prod.begin(), prod.end());
        }
    }
    return BiHomAlgebra::make("rb-deform(" + A->label() + ")", A->context(), n, std::move(mu), A->alpha(),
                              A->beta());
}

AlgebraPtr plus_algebra(const AlgebraPtr& A) {
    if (!is_regular(*A))
        throw Error("NotRegular", "the plus algebra needs invertible multiplicative twists on '" +
                                      A->label() + "'");
    if (!check_bihom_associative(*A).pass &&
        (!check_left_alternative(*A).pass || !check_right_alternative(*A).pass))
        throw Error("PrereqFailed", "the plus algebra needs an associative or alternative input; '" +
                                        A->label() + "' is neither");
    const std::size_t n = A->dim();
    const LinearMap ainv_b = mat_compose(mat_inverse(A->alpha()), A->beta());
    const LinearMap binv_a = mat_compose(mat_inverse(A->beta()), A->alpha());
    std::vector<Scalar> mu;
    mu.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec bi = binv_a.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = vec_add(A->basis_product(i, j), A->multiply(ainv_b.column(j), bi));
            mu.insert(mu.end(), prod.begin(), prod.end());
        }
    }
    return BiHomAlgebra::make("plus(" + A->label() + ")", A->context(), n, std::move(mu), A->alpha(),
                              A->beta());
}

}  // namespace bihom
