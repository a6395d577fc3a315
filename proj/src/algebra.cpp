#include "bihom/algebra.hpp"

#include <utility>

#include "bihom/error.hpp"

namespace bihom {

BiHomAlgebra::BiHomAlgebra(std::string label, ContextPtr context, std::size_t dim, std::vector<Scalar> mu,
                           LinearMap alpha, LinearMap beta)
    : label_(std::move(label)),
      context_(std::move(context)),
      dim_(dim),
      mu_(std::move(mu)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
    if (!context_) throw Error("InvalidArgument", "algebra requires a parameter context");
    if (mu_.size() != dim_ * dim_ * dim_)
        throw Error("DimensionMismatch", "structure tensor has " + std::to_string(mu_.size()) +
                                             " entries, expected " + std::to_string(dim_ * dim_ * dim_));
    for (const Scalar& c : mu_) require_same_context(context_, c.context());
    auto check_map = [&](const LinearMap& m, const char* name) {
        require_same_context(context_, m.context());
        if (m.rows() != dim_ || m.cols() != dim_)
            throw Error("DimensionMismatch", std::string(name) + " map is " + std::to_string(m.rows()) + "x" +
                                                 std::to_string(m.cols()) + ", expected " +
                                                 std::to_string(dim_) + "x" + std::to_string(dim_));
    };
    check_map(alpha_, "alpha");
    check_map(beta_, "beta");
    if (!mat_commute(alpha_, beta_))
        throw Error("NonCommutingMaps", "alpha and beta do not commute on '" + label_ + "'");
}

AlgebraPtr BiHomAlgebra::make(std::string label, ContextPtr context, std::size_t dim, std::vector<Scalar> mu,
                              LinearMap alpha, LinearMap beta) {
    return std::make_shared<const BiHomAlgebra>(std::move(label), std::move(context), dim, std::move(mu),
                                                std::move(alpha), std::move(beta));
}

Vec BiHomAlgebra::basis_product(std::size_t i, std::size_t j) const {
    Vec out;
    out.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out.push_back(mu(i, j, k));
    return out;
}

Vec BiHomAlgebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error("DimensionMismatch", "multiplying vectors of lengths " + std::to_string(x.size()) + ", " +
                                             std::to_string(y.size()) + " in dimension " + std::to_string(dim_));
    Vec out = zero_vec(context_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& c = mu(i, j, k);
                if (!c.is_zero()) out[k] += c * xy;
            }
        }
    }
    return out;
}

Vec BiHomAlgebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
    Vec left = multiply(multiply(x, y), beta_.apply(z));
    Vec right = multiply(alpha_.apply(x), multiply(y, z));
    return vec_sub(left, right);
}

BiHomAlgebra BiHomAlgebra::embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const {
    std::vector<Scalar> mu;
    mu.reserve(mu_.size());
    for (const Scalar& c : mu_) mu.push_back(c.embed(bigger, where));
    return BiHomAlgebra(label_, bigger, dim_, std::move(mu), alpha_.embed(bigger, where),
                        beta_.embed(bigger, where));
}

CheckReport validate(const BiHomAlgebra& A) {
    CheckReport r;
    r.check_name = "well-formed";
    r.stats.strategy = "exhaustive";
    const std::size_t n = A.dim();
    if (mat_commute(A.alpha(), A.beta())) {
        r.note("alpha and beta commute");
    } else {
        r.add_witness(Witness{"twist-commutation", {}, "alpha*beta vs beta*alpha", "nonzero matrix difference"});
    }
    struct Side {
        const char* equation;
        const LinearMap* map;
    };
    const Side sides[] = {{"alpha-multiplicative", &A.alpha()}, {"beta-multiplicative", &A.beta()}};
    for (const Side& s : sides) {
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i) {
            for (std::size_t j = 0; j < n && !found; ++j) {
                Vec lhs = s.map->apply(A.basis_product(i, j));
                Vec rhs = A.multiply(s.map->column(i), s.map->column(j));
                Vec diff = vec_sub(lhs, rhs);
                if (!vec_is_zero(diff)) {
                    r.add_witness(Witness{s.equation, {i, j}, "", vec_str(diff)});
                    found = true;  // least pair in scan order
                }
            }
        }
        r.stats.tuples += n * n;
    }
    return r;
}

namespace {

// Shared implementation of subalgebra/ideal closure; `absorb` additionally
// multiplies H against the whole standard basis from both sides.
CheckReport closure_report(const BiHomAlgebra& A, const Subspace& H, bool absorb) {
    if (H.ambient_dim() != A.dim())
        throw Error("DimensionMismatch", "subspace of ambient dimension " + std::to_string(H.ambient_dim()) +
                                             " inside an algebra of dimension " + std::to_string(A.dim()));
    require_same_context(A.context(), H.context());
    CheckReport r;
    r.check_name = absorb ? "two-sided-ideal" : "subalgebra";
    r.stats.strategy = "exhaustive";
    const std::size_t h = H.dim();

    auto check_membership = [&](const char* equation, std::vector<std::size_t> tuple, const Vec& image,
                                bool& found) {
        if (!found && !H.contains(image)) {
            r.add_witness(Witness{equation, std::move(tuple), "", vec_str(image) + " outside the subspace"});
            found = true;
        }
    };

    for (const char* eq : {"alpha-closure", "beta-closure"}) {
        const LinearMap& m = eq[0] == 'a' ? A.alpha() : A.beta();
        bool found = false;
        for (std::size_t u = 0; u < h; ++u) check_membership(eq, {u}, m.apply(H.basis()[u]), found);
        r.stats.tuples += h;
    }
    if (absorb) {
        bool found_l = false, found_r = false;
        for (std::size_t i = 0; i < A.dim(); ++i) {
            for (std::size_t u = 0; u < h; ++u) {
                check_membership("left-absorption", {i, u}, A.multiply(A.basis(i), H.basis()[u]), found_l);
            }
        }
        for (std::size_t u = 0; u < h; ++u) {
            for (std::size_t i = 0; i < A.dim(); ++i) {
                check_membership("right-absorption", {u, i}, A.multiply(H.basis()[u], A.basis(i)), found_r);
            }
        }
        r.stats.tuples += 2 * A.dim() * h;
    } else {
        bool found = false;
        for (std::size_t u = 0; u < h; ++u) {
            for (std::size_t v = 0; v < h; ++v) {
                check_membership("product-closure", {u, v}, A.multiply(H.basis()[u], H.basis()[v]), found);
            }
        }
        r.stats.tuples += h * h;
    }
    return r;
}

}  // namespace

CheckReport is_subalgebra(const BiHomAlgebra& A, const Subspace& H) { return closure_report(A, H, false); }

CheckReport is_two_sided_ideal(const BiHomAlgebra& A, const Subspace& H) { return closure_report(A, H, true); }

bool same_algebra(const AlgebraPtr& x, const AlgebraPtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (!same_context(x->context(), y->context()) || x->dim() != y->dim()) return false;
    if (x->alpha() != y->alpha() || x->beta() != y->beta()) return false;
    const std::vector<Scalar>& mx = x->mu_tensor();
    const std::vector<Scalar>& my = y->mu_tensor();
    for (std::size_t k = 0; k < mx.size(); ++k) {
        if (!(mx[k] == my[k])) return false;
    }
    return true;
}

AlgebraMorphism make_morphism(AlgebraPtr source, AlgebraPtr target, LinearMap map) {
    if (!source || !target) throw Error("InvalidArgument", "morphism requires source and target algebras");
    require_same_context(source->context(), target->context());
    require_same_context(source->context(), map.context());
    if (map.rows() != target->dim() || map.cols() != source->dim())
        throw Error("DimensionMismatch", "morphism map is " + std::to_string(map.rows()) + "x" +
                                             std::to_string(map.cols()) + ", expected " +
                                             std::to_string(target->dim()) + "x" +
                                             std::to_string(source->dim()));
    return AlgebraMorphism{std::move(source), std::move(target), std::move(map)};
}

CheckReport check_morphism(const AlgebraMorphism& m) {
    CheckReport r;
    r.check_name = "algebra-morphism";
    r.stats.strategy = "exhaustive";
    const BiHomAlgebra& A = *m.source;
    const BiHomAlgebra& B = *m.target;
    const std::size_t n = A.dim();

    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
        for (std::size_t j = 0; j < n && !found; ++j) {
            Vec lhs = m.map.apply(A.basis_product(i, j));
            Vec rhs = B.multiply(m.map.column(i), m.map.column(j));
            Vec diff = vec_sub(lhs, rhs);
            if (!vec_is_zero(diff)) {
                r.add_witness(Witness{"multiplicativity", {i, j}, "", vec_str(diff)});
                found = true;
            }
        }
    }
    r.stats.tuples += n * n;

    struct Side {
        const char* equation;
        const LinearMap *inner, *outer;
    };
    const Side sides[] = {{"alpha-intertwine", &A.alpha(), &B.alpha()},
                          {"beta-intertwine", &A.beta(), &B.beta()}};
    for (const Side& s : sides) {
        LinearMap lhs = mat_compose(m.map, *s.inner);
        LinearMap rhs = mat_compose(*s.outer, m.map);
        for (std::size_t j = 0; j < n; ++j) {
            Vec diff = vec_sub(lhs.column(j), rhs.column(j));
            if (!vec_is_zero(diff)) {
                r.add_witness(Witness{s.equation, {j}, "", vec_str(diff)});
                break;
            }
        }
        r.stats.tuples += n;
    }
    return r;
}

Subspace graph_subspace(const AlgebraMorphism& m) {
    const std::size_t ns = m.source->dim();
    const std::size_t nt = m.target->dim();
    std::vector<Vec> basis;
    basis.reserve(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        Vec v = zero_vec(m.map.context(), ns + nt);
        v[i] = Scalar(m.map.context(), 1L);
        for (std::size_t r = 0; r < nt; ++r) v[ns + r] = m.map.at(r, i);
        basis.push_back(std::move(v));
    }
    return Subspace(m.map.context(), ns + nt, std::move(basis));
}

}  // namespace bihom
