#include "bihom/bimodule_constructions.hpp"

#include <utility>

#include "bihom/checks.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"

namespace bihom {

namespace {

// Action tensor of rho_l composed with (N on the algebra slot, M on the
// module slot).
std::vector<Scalar> compose_left_action(const BiHomBimodule& V, const LinearMap& N, const LinearMap& M) {
    const std::size_t n = V.adim();
    const std::size_t m = V.mdim();
    std::vector<Scalar> out;
    out.reserve(n * m * m);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ai = N.column(i);
        for (std::size_t p = 0; p < m; ++p) {
            Vec img = V.act_left(ai, M.column(p));
            for (std::size_t q = 0; q < m; ++q) out.push_back(std::move(img[q]));
        }
    }
    return out;
}

// Action tensor of rho_r composed with (M on the module slot, N on the
// algebra slot).
std::vector<Scalar> compose_right_action(const BiHomBimodule& V, const LinearMap& M, const LinearMap& N) {
    const std::size_t n = V.adim();
    const std::size_t m = V.mdim();
    std::vector<Scalar> out;
    out.reserve(m * n * m);
    for (std::size_t p = 0; p < m; ++p) {
        const Vec vp = M.column(p);
        for (std::size_t i = 0; i < n; ++i) {
            Vec img = V.act_right(vp, N.column(i));
            for (std::size_t q = 0; q < m; ++q) out.push_back(std::move(img[q]));
        }
    }
    return out;
}

// M(rho_l(a, v)) == rho_l(N(a), M(v)) over all basis pairs.
bool left_intertwines(const BiHomBimodule& V, const LinearMap& N, const LinearMap& M) {
    for (std::size_t i = 0; i < V.adim(); ++i) {
        for (std::size_t p = 0; p < V.mdim(); ++p) {
            Vec lhs = M.apply(V.act_left(V.host()->basis(i), V.basis(p)));
            Vec rhs = V.act_left(N.column(i), M.column(p));
            if (!vec_eq(lhs, rhs)) return false;
        }
    }
    return true;
}

// M(rho_r(v, a)) == rho_r(M(v), N(a)) over all basis pairs.
bool right_intertwines(const BiHomBimodule& V, const LinearMap& M, const LinearMap& N) {
    for (std::size_t p = 0; p < V.mdim(); ++p) {
        for (std::size_t i = 0; i < V.adim(); ++i) {
            Vec lhs = M.apply(V.act_right(V.basis(p), V.host()->basis(i)));
            Vec rhs = V.act_right(M.column(p), N.column(i));
            if (!vec_eq(lhs, rhs)) return false;
        }
    }
    return true;
}

void require_module_map(const BiHomBimodule& V, const LinearMap& m, const char* name) {
    require_same_context(V.context(), m.context());
    if (m.rows() != V.mdim() || m.cols() != V.mdim())
        throw Error("DimensionMismatch", std::string(name) + " map is " + std::to_string(m.rows()) + "x" +
                                             std::to_string(m.cols()) + ", expected " +
                                             std::to_string(V.mdim()) + "x" + std::to_string(V.mdim()));
}

void require_intertwining(const BiHomBimodule& V, const LinearMap& alpha2, const LinearMap& beta2,
                          const LinearMap& phi2, const LinearMap& psi2) {
    if (!left_intertwines(V, alpha2, phi2))
        throw Error("IntertwiningFailed",
                    "the phi map does not intertwine the left action with the alpha map on '" +
                        V.label() + "'");
    if (!left_intertwines(V, beta2, psi2))
        throw Error("IntertwiningFailed",
                    "the psi map does not intertwine the left action with the beta map on '" +
                        V.label() + "'");
    if (!right_intertwines(V, phi2, alpha2))
        throw Error("IntertwiningFailed",
                    "the phi map does not intertwine the right action with the alpha map on '" +
                        V.label() + "'");
    if (!right_intertwines(V, psi2, beta2))
        throw Error("IntertwiningFailed",
                    "the psi map does not intertwine the right action with the beta map on '" +
                        V.label() + "'");
}

}  // namespace

BimodulePtr regular_bimodule(const AlgebraPtr& A) {
    if (!A) throw Error("InvalidArgument", "regular bimodule requires a host algebra");
    return BiHomBimodule::make("regular(" + A->label() + ")", A, A->dim(), A->alpha(), A->beta(),
                               A->mu_tensor(), A->mu_tensor());
}

BimodulePtr ideal_bimodule(const AlgebraPtr& A, const Subspace& I) {
    if (!A) throw Error("InvalidArgument", "ideal bimodule requires a host algebra");
    if (!is_two_sided_ideal(*A, I).pass)
        throw Error("NotAnIdeal", "the subspace is not a two-sided ideal of '" + A->label() + "'");
    const ContextPtr& ctx = A->context();
    const std::size_t n = A->dim();
    const std::size_t m = I.dim();
    const LinearMap B = LinearMap::from_columns(ctx, n, I.basis());
    auto coords = [&](const Vec& w) {
        auto c = solve(B, w);
        if (!c) throw Error("NotAnIdeal", "a product left the subspace inside '" + A->label() + "'");
        return *c;
    };
    std::vector<Vec> phi_cols, psi_cols;
    phi_cols.reserve(m);
    psi_cols.reserve(m);
    for (std::size_t u = 0; u < m; ++u) {
        phi_cols.push_back(coords(A->alpha().apply(I.basis()[u])));
        psi_cols.push_back(coords(A->beta().apply(I.basis()[u])));
    }
    std::vector<Scalar> rl, rr;
    rl.reserve(n * m * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t u = 0; u < m; ++u) {
            Vec img = coords(A->multiply(A->basis(i), I.basis()[u]));
            for (std::size_t q = 0; q < m; ++q) rl.push_back(std::move(img[q]));
        }
    }
    rr.reserve(m * n * m);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec img = coords(A->multiply(I.basis()[u], A->basis(i)));
            for (std::size_t q = 0; q < m; ++q) rr.push_back(std::move(img[q]));
        }
    }
    return BiHomBimodule::make("ideal(" + A->label() + ")", A, m,
                               LinearMap::from_columns(ctx, m, phi_cols),
                               LinearMap::from_columns(ctx, m, psi_cols), std::move(rl), std::move(rr));
}

BimodulePtr bimodule_via_surjection(const AlgebraMorphism& f) {
    if (!check_morphism(f).pass)
        throw Error("NotAMorphism", "the map from '" + f.source->label() + "' to '" + f.target->label() +
                                        "' is not an algebra morphism");
    if (mat_rank(f.map) != f.target->dim())
        throw Error("NotSurjective", "the morphism onto '" + f.target->label() + "' has rank " +
                                         std::to_string(mat_rank(f.map)) + " < " +
                                         std::to_string(f.target->dim()));
    const AlgebraPtr& A = f.source;
    const BiHomAlgebra& B = *f.target;
    const std::size_t n = A->dim();
    const std::size_t m = B.dim();
    std::vector<Scalar> rl, rr;
    rl.reserve(n * m * m);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec fi = f.map.column(i);
        for (std::size_t p = 0; p < m; ++p) {
            Vec img = B.multiply(fi, B.basis(p));
            for (std::size_t q = 0; q < m; ++q) rl.push_back(std::move(img[q]));
        }
    }
    rr.reserve(m * n * m);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t i = 0; i < n; ++i) {
            Vec img = B.multiply(B.basis(p), f.map.column(i));
            for (std::size_t q = 0; q < m; ++q) rr.push_back(std::move(img[q]));
        }
    }
    return BiHomBimodule::make("surjection(" + B.label() + ")", A, m, B.alpha(), B.beta(), std::move(rl),
                               std::move(rr));
}

BimodulePtr shift_bimodule(const BimodulePtr& V, std::size_t a_pow, std::size_t b_pow) {
    if (!V) throw Error("InvalidArgument", "shift requires a bimodule");
    if (!check_alt_bimodule(*V).pass)
        throw Error("PrereqFailed", "the shift construction needs an alternative bimodule, but '" +
                                        V->label() + "' fails the check");
    const BiHomAlgebra& A = *V->host();
    const LinearMap T = mat_compose(mat_pow(A.alpha(), a_pow), mat_pow(A.beta(), b_pow));
    const LinearMap id = LinearMap::identity(V->context(), V->mdim());
    return BiHomBimodule::make("shift(" + V->label() + ")", V->host(), V->mdim(), V->phi(), V->psi(),
                               compose_left_action(*V, T, id), compose_right_action(*V, id, T));
}

BimodulePtr twist_bimodule(const BimodulePtr& V, const LinearMap& alpha2, const LinearMap& beta2,
                           const LinearMap& phi2, const LinearMap& psi2) {
    if (!V) throw Error("InvalidArgument", "twist requires a bimodule");
    AlgebraPtr host2 = yau_twist(V->host(), alpha2, beta2);
    require_module_map(*V, phi2, "phi");
    require_module_map(*V, psi2, "psi");
    const LinearMap* mods[] = {&V->phi(), &V->psi(), &phi2, &psi2};
    for (std::size_t x = 0; x < 4; ++x) {
        for (std::size_t y = x + 1; y < 4; ++y) {
            if (!mat_commute(*mods[x], *mods[y]))
                throw Error("NonCommutingMaps",
                            "the carrier twist maps and the new module maps must commute pairwise on '" +
                                V->label() + "'");
        }
    }
    require_intertwining(*V, alpha2, beta2, phi2, psi2);
    return BiHomBimodule::make("twist(" + V->label() + ")", std::move(host2), V->mdim(),
                               mat_compose(V->phi(), phi2), mat_compose(V->psi(), psi2),
                               compose_left_action(*V, alpha2, psi2),
                               compose_right_action(*V, phi2, beta2));
}

BimodulePtr twist_bimodule_powers(const BimodulePtr& V, std::size_t n, std::size_t m, std::size_t p,
                                  std::size_t q, std::size_t r, std::size_t s) {
    if (!V) throw Error("InvalidArgument", "twist requires a bimodule");
    const BiHomAlgebra& A = *V->host();
    const LinearMap ar = mat_pow(A.alpha(), r);
    const LinearMap bs = mat_pow(A.beta(), s);
    const LinearMap fp = mat_pow(V->phi(), p);
    const LinearMap sq = mat_pow(V->psi(), q);
    require_intertwining(*V, ar, bs, fp, sq);
    AlgebraPtr host2 = yau_twist(V->host(), ar, bs);
    const LinearMap left_alg = mat_compose(mat_pow(A.alpha(), n + r), mat_pow(A.beta(), m));
    const LinearMap right_alg = mat_compose(mat_pow(A.alpha(), n), mat_pow(A.beta(), m + s));
    return BiHomBimodule::make("power-twist(" + V->label() + ")", std::move(host2), V->mdim(),
                               mat_pow(V->phi(), p + 1), mat_pow(V->psi(), q + 1),
                               compose_left_action(*V, left_alg, sq),
                               compose_right_action(*V, fp, right_alg));
}

BimodulePtr rb_twist_bimodule(const BimodulePtr& V, const LinearMap& R) {
    if (!V) throw Error("InvalidArgument", "deformation requires a bimodule");
    AlgebraPtr host2 = rota_baxter_deformation(V->host(), R);
    const LinearMap id = LinearMap::identity(V->context(), V->mdim());
    return BiHomBimodule::make("rb-twist(" + V->label() + ")", std::move(host2), V->mdim(), V->phi(),
                               V->psi(), compose_left_action(*V, R, id),
                               compose_right_action(*V, id, R));
}

BimodulePtr jordan_shift_bimodule(const BimodulePtr& V, std::size_t k) {
    if (!V) throw Error("InvalidArgument", "shift requires a bimodule");
    if (!check_jordan_bimodule(*V).pass)
        throw Error("PrereqFailed", "the Jordan shift needs a Jordan bimodule, but '" + V->label() +
                                        "' fails the check");
    const BiHomAlgebra& A = *V->host();
    const LinearMap id = LinearMap::identity(V->context(), V->mdim());
    return BiHomBimodule::make("jordan-shift(" + V->label() + ")", V->host(), V->mdim(), V->phi(),
                               V->psi(), compose_left_action(*V, mat_pow(A.alpha(), k), id),
                               compose_right_action(*V, id, mat_pow(A.beta(), k)));
}

namespace {

void require_classical_jordan(const BiHomBimodule& V) {
    const BiHomAlgebra& A = *V.host();
    if (!A.alpha().is_identity() || !A.beta().is_identity())
        throw Error("PrereqFailed", "the deformation starts from identity twists on the host, but '" +
                                        A.label() + "' is already twisted");
    if (!V.phi().is_identity() || !V.psi().is_identity())
        throw Error("PrereqFailed", "the deformation starts from identity twists on the carrier, but '" +
                                        V.label() + "' is already twisted");
    if (!check_bihom_commutative(A).pass)
        throw Error("PrereqFailed",
                    "the deformation needs a commutative Jordan host, but '" + A.label() + "' is not commutative");
    if (!check_bihom_jordan(A).pass)
        throw Error("PrereqFailed", "the deformation needs a Jordan host, but '" + A.label() +
                                        "' fails the Jordan identity");
}

BimodulePtr deform_impl(const BimodulePtr& V, const LinearMap& alpha, const LinearMap& beta,
                        const LinearMap& phi, const LinearMap& psi, std::size_t a_extra,
                        const std::string& label) {
    if (!V) throw Error("InvalidArgument", "deformation requires a bimodule");
    require_classical_jordan(*V);
    require_module_map(*V, phi, "phi");
    require_module_map(*V, psi, "psi");
    require_intertwining(*V, alpha, beta, phi, psi);
    AlgebraPtr host2 = yau_twist(V->host(), alpha, beta);
    return BiHomBimodule::make(label + "(" + V->label() + ")", std::move(host2), V->mdim(), phi, psi,
                               compose_left_action(*V, mat_pow(alpha, a_extra + 1), psi),
                               compose_right_action(*V, phi, mat_pow(beta, a_extra + 1)));
}

}  // namespace

BimodulePtr jordan_deform_bimodule(const BimodulePtr& V, const LinearMap& alpha, const LinearMap& beta,
                                   const LinearMap& phi, const LinearMap& psi) {
    return deform_impl(V, alpha, beta, phi, psi, 0, "deform");
}

BimodulePtr jordan_deform_bimodule_powers(const BimodulePtr& V, const LinearMap& alpha,
                                          const LinearMap& beta, const LinearMap& phi,
                                          const LinearMap& psi, std::size_t k) {
    return deform_impl(V, alpha, beta, phi, psi, k, "power-deform");
}

BimodulePtr special_pair_to_jordan_bimodule(const AlgebraPtr& A, std::size_t mdim, const LinearMap& phi,
                                            const LinearMap& psi, const std::vector<Scalar>& rho1,
                                            const std::vector<Scalar>& rho2) {
    if (!A) throw Error("InvalidArgument", "the special-pair construction requires a host algebra");
    if (!is_regular(*A))
        throw Error("NotRegular", "the special-pair construction needs a regular host, but '" +
                                      A->label() + "' has a singular twist or fails validation");
    if (!check_bihom_commutative(*A).pass)
        throw Error("PrereqFailed", "the special-pair construction needs a BiHom-commutative host, but '" +
                                        A->label() + "' is not");
    if (!check_bihom_jordan(*A).pass)
        throw Error("PrereqFailed", "the special-pair construction needs a BiHom-Jordan host, but '" +
                                        A->label() + "' fails the Jordan identity");
    if (!mat_is_invertible(phi) || !mat_is_invertible(psi))
        throw Error("PhiPsiNotInvertible",
                    "the special-pair construction needs invertible carrier twists on '" + A->label() + "'");
    const ContextPtr& ctx = A->context();
    const std::size_t n = A->dim();
    const std::vector<Scalar> zero_l(n * mdim * mdim, Scalar(ctx));
    const std::vector<Scalar> zero_r(mdim * n * mdim, Scalar(ctx));
    auto part = [&](const std::vector<Scalar>& rl, const std::vector<Scalar>& rr, const char* which) {
        try {
            return BiHomBimodule::make(std::string(which) + "-part", A, mdim, phi, psi, rl, rr);
        } catch (const Error& e) {
            if (e.kind() == "ModuleMorphismFailed")
                throw Error("PrereqFailed", std::string("the ") + which +
                                                " action does not intertwine the carrier twists: " +
                                                e.what());
            throw;
        }
    };
    BimodulePtr left_part = part(rho1, zero_r, "left");
    if (!check_left_special(*left_part).pass)
        throw Error("PrereqFailed", "the left action is not left special over '" + A->label() + "'");
    BimodulePtr right_part = part(zero_l, rho2, "right");
    if (!check_right_special(*right_part).pass)
        throw Error("PrereqFailed", "the right action is not right special over '" + A->label() + "'");
    if (!check_operator_commutativity(*A, mdim, rho1, rho2).pass)
        throw Error("PrereqFailed", "the left and right actions do not commute as operators over '" +
                                        A->label() + "'");

    const LinearMap ab_inv = mat_compose(A->alpha(), mat_inverse(A->beta()));
    const LinearMap ba_inv = mat_compose(A->beta(), mat_inverse(A->alpha()));
    const LinearMap sf_inv = mat_compose(psi, mat_inverse(phi));
    const LinearMap fs_inv = mat_compose(phi, mat_inverse(psi));
    std::vector<Scalar> rl, rr;
    rl.reserve(n * mdim * mdim);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = A->basis(i);
        const Vec abi = ab_inv.column(i);
        for (std::size_t p = 0; p < mdim; ++p) {
            Vec img = vec_add(tensor_act_left(ctx, n, mdim, rho1, ei, unit_vec(ctx, mdim, p)),
                              tensor_act_right(ctx, n, mdim, rho2, sf_inv.column(p), abi));
            for (std::size_t q = 0; q < mdim; ++q) rl.push_back(std::move(img[q]));
        }
    }
    rr.reserve(mdim * n * mdim);
    for (std::size_t p = 0; p < mdim; ++p) {
        const Vec fsp = fs_inv.column(p);
        for (std::size_t i = 0; i < n; ++i) {
            Vec img = vec_add(tensor_act_left(ctx, n, mdim, rho1, ba_inv.column(i), fsp),
                              tensor_act_right(ctx, n, mdim, rho2, unit_vec(ctx, mdim, p), A->basis(i)));
            for (std::size_t q = 0; q < mdim; ++q) rr.push_back(std::move(img[q]));
        }
    }
    return BiHomBimodule::make("pair-module(" + A->label() + ")", A, mdim, phi, psi, std::move(rl),
                               std::move(rr));
}

AlgebraPtr split_null_extension(const AlgebraPtr& A, const BimodulePtr& V, const std::string& selector) {
    if (!A || !V) throw Error("InvalidArgument", "the split null extension requires an algebra and a bimodule");
    if (!same_algebra(A, V->host()))
        throw Error("InvalidArgument", "the split null extension needs the bimodule's own host algebra");
    if (selector == "alternative") {
        if (!check_left_alternative(*A).pass || !check_right_alternative(*A).pass)
            throw Error("PrereqFailed", "the alternative extension needs an alternative host, but '" +
                                            A->label() + "' fails the check");
        if (!check_alt_bimodule(*V).pass)
            throw Error("PrereqFailed", "the alternative extension needs an alternative bimodule, but '" +
                                            V->label() + "' fails the check");
    } else if (selector == "jordan") {
        if (!check_jordan_bimodule(*V).pass)
            throw Error("PrereqFailed", "the Jordan extension needs a Jordan bimodule, but '" +
                                            V->label() + "' fails the check");
    } else {
        throw Error("InvalidArgument", "extension selector must be 'alternative' or 'jordan', got '" +
                                           selector + "'");
    }
    const ContextPtr& ctx = A->context();
    const std::size_t n = A->dim();
    const std::size_t m = V->mdim();
    const std::size_t N = n + m;
    std::vector<Scalar> mu(N * N * N, Scalar(ctx));
    auto at = [&](std::size_t I, std::size_t J, std::size_t K) -> Scalar& {
        return mu[(I * N + J) * N + K];
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) at(i, j, k) = A->mu(i, j, k);
        }
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = 0; q < m; ++q) at(i, n + p, n + q) = V->l(i, p, q);
        }
    }
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t q = 0; q < m; ++q) at(n + p, j, n + q) = V->r(p, j, q);
        }
    }
    return BiHomAlgebra::make("sne(" + A->label() + ", " + V->label() + ")", ctx, N, std::move(mu),
                              block_diag(A->alpha(), V->phi()), block_diag(A->beta(), V->psi()));
}

BimodulePtr rehost_bimodule(const BimodulePtr& V, const AlgebraPtr& newHost) {
    if (!V || !newHost) throw Error("InvalidArgument", "rehosting requires a bimodule and a host algebra");
    require_same_context(V->context(), newHost->context());
    if (newHost->dim() != V->adim())
        throw Error("DimensionMismatch", "new host has dimension " + std::to_string(newHost->dim()) +
                                             ", expected " + std::to_string(V->adim()));
    return BiHomBimodule::make("rehost(" + V->label() + ")", newHost, V->mdim(), V->phi(), V->psi(),
                               V->rho_l(), V->rho_r());
}

}  // namespace bihom
