#include "bihom/bimodule.hpp"

#include <utility>

#include "bihom/checks.hpp"
#include "bihom/error.hpp"

namespace bihom {

namespace {

std::vector<Vec> columns_of(const LinearMap& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return cols;
}

const char* pattern_name(ModulePattern p) {
    switch (p) {
        case ModulePattern::VAA: return "VAA";
        case ModulePattern::AVA: return "AVA";
        default: return "AAV";
    }
}

void require_jordan_host(const BiHomAlgebra& A, const std::string& what) {
    if (!check_bihom_commutative(A).pass)
        throw Error("PrereqFailed",
                    what + " needs a BiHom-commutative host, but '" + A.label() + "' is not");
    if (!check_bihom_jordan(A).pass)
        throw Error("PrereqFailed",
                    what + " needs a BiHom-Jordan host, but '" + A.label() + "' fails the Jordan identity");
}

void require_psi_invertible(const BiHomBimodule& V, const std::string& what) {
    if (!mat_is_invertible(V.psi()))
        throw Error("PsiNotInvertible",
                    what + " on '" + V.label() + "' needs an invertible module twist psi");
}

}  // namespace

BiHomBimodule::BiHomBimodule(std::string label, AlgebraPtr host, std::size_t mdim, LinearMap phi,
                             LinearMap psi, std::vector<Scalar> rho_l, std::vector<Scalar> rho_r)
    : label_(std::move(label)),
      host_(std::move(host)),
      mdim_(mdim),
      phi_(std::move(phi)),
      psi_(std::move(psi)),
      rho_l_(std::move(rho_l)),
      rho_r_(std::move(rho_r)) {
    if (!host_) throw Error("InvalidArgument", "bimodule requires a host algebra");
    const std::size_t n = host_->dim();
    const ContextPtr& ctx = host_->context();
    if (rho_l_.size() != n * mdim_ * mdim_)
        throw Error("DimensionMismatch", "left action tensor has " + std::to_string(rho_l_.size()) +
                                             " entries, expected " + std::to_string(n * mdim_ * mdim_));
    if (rho_r_.size() != mdim_ * n * mdim_)
        throw Error("DimensionMismatch", "right action tensor has " + std::to_string(rho_r_.size()) +
                                             " entries, expected " + std::to_string(mdim_ * n * mdim_));
    for (const Scalar& c : rho_l_) require_same_context(ctx, c.context());
    for (const Scalar& c : rho_r_) require_same_context(ctx, c.context());
    auto check_map = [&](const LinearMap& m, const char* name) {
        require_same_context(ctx, m.context());
        if (m.rows() != mdim_ || m.cols() != mdim_)
            throw Error("DimensionMismatch", std::string(name) + " map is " + std::to_string(m.rows()) +
                                                 "x" + std::to_string(m.cols()) + ", expected " +
                                                 std::to_string(mdim_) + "x" + std::to_string(mdim_));
    };
    check_map(phi_, "phi");
    check_map(psi_, "psi");
    if (!mat_commute(phi_, psi_))
        throw Error("NonCommutingMaps", "phi and psi do not commute on '" + label_ + "'");

    // The twist maps must act as structure maps: each intertwines the actions
    // with the matching algebra twist.
    struct Family {
        const char* display;
        const LinearMap* module_map;  // phi or psi
        const LinearMap* algebra_map;  // alpha or beta
        bool left;
    };
    const Family families[] = {
        {"phi(a.v) = alpha(a).phi(v)", &phi_, &host_->alpha(), true},
        {"psi(a.v) = beta(a).psi(v)", &psi_, &host_->beta(), true},
        {"phi(v.a) = phi(v).alpha(a)", &phi_, &host_->alpha(), false},
        {"psi(v.a) = psi(v).beta(a)", &psi_, &host_->beta(), false},
    };
    for (const Family& f : families) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t p = 0; p < mdim_; ++p) {
                Vec lhs, rhs;
                if (f.left) {
                    Vec col(mdim_, Scalar(ctx));
                    for (std::size_t q = 0; q < mdim_; ++q) col[q] = l(i, p, q);
                    lhs = f.module_map->apply(col);
                    rhs = tensor_act_left(ctx, n, mdim_, rho_l_, f.algebra_map->column(i),
                                          f.module_map->column(p));
                } else {
                    Vec col(mdim_, Scalar(ctx));
                    for (std::size_t q = 0; q < mdim_; ++q) col[q] = r(p, i, q);
                    lhs = f.module_map->apply(col);
                    rhs = tensor_act_right(ctx, n, mdim_, rho_r_, f.module_map->column(p),
                                           f.algebra_map->column(i));
                }
                if (!vec_eq(lhs, rhs))
                    throw Error("ModuleMorphismFailed", std::string(f.display) + " fails at (i=" +
                                                            std::to_string(i) + ", p=" + std::to_string(p) +
                                                            ") on '" + label_ + "'");
            }
        }
    }
}

BimodulePtr BiHomBimodule::make(std::string label, AlgebraPtr host, std::size_t mdim, LinearMap phi,
                                LinearMap psi, std::vector<Scalar> rho_l, std::vector<Scalar> rho_r) {
    return std::make_shared<const BiHomBimodule>(std::move(label), std::move(host), mdim, std::move(phi),
                                                 std::move(psi), std::move(rho_l), std::move(rho_r));
}

Vec BiHomBimodule::act_left(const Vec& a, const Vec& v) const {
    return tensor_act_left(context(), host_->dim(), mdim_, rho_l_, a, v);
}

Vec BiHomBimodule::act_right(const Vec& v, const Vec& a) const {
    return tensor_act_right(context(), host_->dim(), mdim_, rho_r_, v, a);
}

BiHomBimodule BiHomBimodule::embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const {
    auto host = std::make_shared<const BiHomAlgebra>(host_->embed(bigger, where));
    std::vector<Scalar> rl;
    rl.reserve(rho_l_.size());
    for (const Scalar& c : rho_l_) rl.push_back(c.embed(bigger, where));
    std::vector<Scalar> rr;
    rr.reserve(rho_r_.size());
    for (const Scalar& c : rho_r_) rr.push_back(c.embed(bigger, where));
    return BiHomBimodule(label_, std::move(host), mdim_, phi_.embed(bigger, where),
                         psi_.embed(bigger, where), std::move(rl), std::move(rr));
}

Vec tensor_act_left(const ContextPtr& ctx, std::size_t n, std::size_t m,
                    const std::vector<Scalar>& rho_l, const Vec& a, const Vec& v) {
    if (a.size() != n || v.size() != m)
        throw Error("DimensionMismatch", "left action got lengths (" + std::to_string(a.size()) + ", " +
                                             std::to_string(v.size()) + "), expected (" + std::to_string(n) +
                                             ", " + std::to_string(m) + ")");
    Vec out = zero_vec(ctx, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t p = 0; p < m; ++p) {
            if (v[p].is_zero()) continue;
            const Scalar av = a[i] * v[p];
            for (std::size_t q = 0; q < m; ++q) {
                const Scalar& c = rho_l[(i * m + p) * m + q];
                if (!c.is_zero()) out[q] += c * av;
            }
        }
    }
    return out;
}

Vec tensor_act_right(const ContextPtr& ctx, std::size_t n, std::size_t m,
                     const std::vector<Scalar>& rho_r, const Vec& v, const Vec& a) {
    if (v.size() != m || a.size() != n)
        throw Error("DimensionMismatch", "right action got lengths (" + std::to_string(v.size()) + ", " +
                                             std::to_string(a.size()) + "), expected (" + std::to_string(m) +
                                             ", " + std::to_string(n) + ")");
    Vec out = zero_vec(ctx, m);
    for (std::size_t p = 0; p < m; ++p) {
        if (v[p].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            const Scalar va = v[p] * a[i];
            for (std::size_t q = 0; q < m; ++q) {
                const Scalar& c = rho_r[(p * n + i) * m + q];
                if (!c.is_zero()) out[q] += c * va;
            }
        }
    }
    return out;
}

Vec module_associator(const BiHomBimodule& V, ModulePattern pattern, const Vec& t1, const Vec& t2,
                      const Vec& t3) {
    const BiHomAlgebra& A = *V.host();
    const std::size_t n = A.dim();
    const std::size_t m = V.mdim();
    auto expect = [&](std::size_t s1, std::size_t s2, std::size_t s3) {
        if (t1.size() != s1 || t2.size() != s2 || t3.size() != s3)
            throw Error("PatternMismatch",
                        std::string(pattern_name(pattern)) + " expects lengths (" + std::to_string(s1) +
                            ", " + std::to_string(s2) + ", " + std::to_string(s3) + "), got (" +
                            std::to_string(t1.size()) + ", " + std::to_string(t2.size()) + ", " +
                            std::to_string(t3.size()) + ")");
    };
    switch (pattern) {
        case ModulePattern::VAA: {
            expect(m, n, n);
            Vec lhs = V.act_right(V.act_right(t1, t2), A.beta().apply(t3));
            Vec rhs = V.act_right(V.phi().apply(t1), A.multiply(t2, t3));
            return vec_sub(lhs, rhs);
        }
        case ModulePattern::AVA: {
            expect(n, m, n);
            Vec lhs = V.act_right(V.act_left(t1, t2), A.beta().apply(t3));
            Vec rhs = V.act_left(A.alpha().apply(t1), V.act_right(t2, t3));
            return vec_sub(lhs, rhs);
        }
        default: {
            expect(n, n, m);
            Vec lhs = V.act_left(A.multiply(t1, t2), V.psi().apply(t3));
            Vec rhs = V.act_left(A.alpha().apply(t1), V.act_left(t2, t3));
            return vec_sub(lhs, rhs);
        }
    }
}

CheckReport check_assoc_bimodule(const BiHomBimodule& V) {
    CheckReport r;
    r.check_name = "assoc-bimodule";
    r.stats.strategy = "exhaustive";
    const BiHomAlgebra& A = *V.host();
    const std::size_t n = A.dim();
    const std::size_t m = V.mdim();
    std::vector<TupleEquation> eqs;
    eqs.push_back({"left-associative",
                   {n, n, m},
                   [&](const std::vector<std::size_t>& t) {
                       return module_associator(V, ModulePattern::AAV, A.basis(t[0]), A.basis(t[1]),
                                                V.basis(t[2]));
                   }});
    eqs.push_back({"middle-associative",
                   {n, m, n},
                   [&](const std::vector<std::size_t>& t) {
                       return module_associator(V, ModulePattern::AVA, A.basis(t[0]), V.basis(t[1]),
                                                A.basis(t[2]));
                   }});
    eqs.push_back({"right-associative",
                   {m, n, n},
                   [&](const std::vector<std::size_t>& t) {
                       return module_associator(V, ModulePattern::VAA, V.basis(t[0]), A.basis(t[1]),
                                                A.basis(t[2]));
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

CheckReport check_alt_bimodule(const BiHomBimodule& V, const CheckMode& mode) {
    CheckReport r;
    r.check_name = "alt-bimodule";
    r.stats.strategy = strategy_label(mode);
    const BiHomAlgebra& A = *V.host();
    const std::size_t n = A.dim();
    const std::size_t m = V.mdim();
    const std::vector<Vec> a = columns_of(A.alpha());
    const std::vector<Vec> b = columns_of(A.beta());
    const std::vector<Vec> f = columns_of(V.phi());
    const std::vector<Vec> s = columns_of(V.psi());

    // The two slot-exchange identities are linear in every argument, so the
    // basis scan below is complete; they run in every mode.
    std::vector<TupleEquation> exchange;
    exchange.push_back({"left-slot-exchange",
                        {n, m, n},
                        [&](const std::vector<std::size_t>& t) {
                            Vec first = module_associator(V, ModulePattern::AVA, b[t[0]], f[t[1]],
                                                          A.basis(t[2]));
                            Vec second = module_associator(V, ModulePattern::VAA, s[t[1]], a[t[0]],
                                                           A.basis(t[2]));
                            return vec_add(first, second);
                        }});
    exchange.push_back({"right-slot-exchange",
                        {n, n, m},
                        [&](const std::vector<std::size_t>& t) {
                            Vec first = module_associator(V, ModulePattern::AAV, A.basis(t[0]), b[t[1]],
                                                          f[t[2]]);
                            Vec second = module_associator(V, ModulePattern::AVA, A.basis(t[0]), s[t[2]],
                                                           a[t[1]]);
                            return vec_add(first, second);
                        }});

    if (mode.strategy == Strategy::Linearized) {
        std::vector<TupleEquation> eqs;
        eqs.push_back({"left-alternative-polarized",
                       {n, n, m},
                       [&](const std::vector<std::size_t>& t) {
                           Vec first = module_associator(V, ModulePattern::AAV, b[t[0]], a[t[1]],
                                                         V.basis(t[2]));
                           Vec second = module_associator(V, ModulePattern::AAV, b[t[1]], a[t[0]],
                                                          V.basis(t[2]));
                           return vec_add(first, second);
                       }});
        eqs.push_back({"right-alternative-polarized",
                       {m, n, n},
                       [&](const std::vector<std::size_t>& t) {
                           Vec first = module_associator(V, ModulePattern::VAA, V.basis(t[0]), b[t[1]],
                                                         a[t[2]]);
                           Vec second = module_associator(V, ModulePattern::VAA, V.basis(t[0]), b[t[2]],
                                                          a[t[1]]);
                           return vec_add(first, second);
                       }});
        for (TupleEquation& eq : exchange) eqs.push_back(std::move(eq));
        run_tuple_equations(r, eqs);
        return r;
    }

    DirectSystem sys;
    sys.shape = {{"x", n}, {"v", m}};
    sys.make = [&V](const ContextPtr& ctx, const std::vector<std::size_t>& where) {
        auto big = std::make_shared<const BiHomBimodule>(V.embed(ctx, where));
        std::vector<DirectEquation> eqs;
        eqs.push_back({"left-alternative-quadratic", [big](const std::vector<Vec>& el) {
                           return module_associator(*big, ModulePattern::AAV,
                                                    big->host()->beta().apply(el[0]),
                                                    big->host()->alpha().apply(el[0]), el[1]);
                       }});
        eqs.push_back({"right-alternative-quadratic", [big](const std::vector<Vec>& el) {
                           return module_associator(*big, ModulePattern::VAA, el[1],
                                                    big->host()->beta().apply(el[0]),
                                                    big->host()->alpha().apply(el[0]));
                       }});
        return eqs;
    };
    run_direct(r, V.context(), mode, sys);
    run_tuple_equations(r, exchange);
    r.note("slot-exchange identities are multilinear and run over all basis tuples in every mode");
    return r;
}

namespace {

// Both right-module identities, phrased on arbitrary elements (x, y, z, v) so
// that the same residuals serve the basis scan and the direct modes.
std::vector<DirectEquation> right_jordan_equations(std::shared_ptr<const BiHomBimodule> W) {
    const BiHomAlgebra& A = *W->host();
    auto fs2 = std::make_shared<LinearMap>(mat_compose(W->phi(), mat_pow(W->psi(), 2)));
    auto f2s2 = std::make_shared<LinearMap>(mat_compose(mat_pow(W->phi(), 2), mat_pow(W->psi(), 2)));
    auto s2 = std::make_shared<LinearMap>(mat_pow(W->psi(), 2));
    auto ab = std::make_shared<LinearMap>(mat_compose(A.alpha(), A.beta()));
    auto a2 = std::make_shared<LinearMap>(mat_pow(A.alpha(), 2));
    auto a3 = std::make_shared<LinearMap>(mat_pow(A.alpha(), 3));
    auto ba = std::make_shared<LinearMap>(mat_compose(A.beta(), A.alpha()));
    auto ba2 = std::make_shared<LinearMap>(mat_compose(A.beta(), mat_pow(A.alpha(), 2)));
    auto ba3 = std::make_shared<LinearMap>(mat_compose(A.beta(), mat_pow(A.alpha(), 3)));
    auto a2b = std::make_shared<LinearMap>(mat_compose(mat_pow(A.alpha(), 2), A.beta()));

    std::vector<DirectEquation> eqs;
    eqs.push_back(
        {"right-jordan-cyclic", [W, fs2, ab, a2, ba2, ba3, a2b, a3](const std::vector<Vec>& el) {
             const BiHomAlgebra& H = *W->host();
             const Vec fv = fs2->apply(el[3]);
             auto term = [&](const Vec& x, const Vec& y, const Vec& z) {
                 Vec lhs = W->act_right(W->act_right(fv, H.multiply(ab->apply(x), a2->apply(y))),
                                        ba3->apply(z));
                 Vec rhs = W->act_right(W->act_right(fv, ba2->apply(z)),
                                        H.multiply(a2b->apply(x), a3->apply(y)));
                 return vec_sub(lhs, rhs);
             };
             Vec sum = term(el[0], el[1], el[2]);
             sum = vec_add(sum, term(el[1], el[2], el[0]));
             return vec_add(sum, term(el[2], el[0], el[1]));
         }});
    eqs.push_back(
        {"right-jordan-nested",
         [W, fs2, f2s2, s2, ab, a2, a3, ba, ba2, ba3, a2b](const std::vector<Vec>& el) {
             const BiHomAlgebra& H = *W->host();
             const Vec& x = el[0];
             const Vec& y = el[1];
             const Vec& z = el[2];
             const Vec& v = el[3];
             Vec out = W->act_right(
                 W->act_right(W->act_right(s2->apply(v), ba->apply(x)), ba2->apply(y)), ba3->apply(z));
             out = vec_add(out, W->act_right(W->act_right(W->act_right(s2->apply(v), ba->apply(z)),
                                                          ba2->apply(y)),
                                             ba3->apply(x)));
             out = vec_add(out, W->act_right(f2s2->apply(v),
                                             H.multiply(H.multiply(ba->apply(x), a2->apply(z)),
                                                        a3->apply(y))));
             out = vec_sub(out, W->act_right(W->act_right(fs2->apply(v), ba2->apply(x)),
                                             H.multiply(ba2->apply(y), a3->apply(z))));
             out = vec_sub(out, W->act_right(W->act_right(fs2->apply(v), ba2->apply(z)),
                                             H.multiply(ba2->apply(y), a3->apply(x))));
             out = vec_sub(out, W->act_right(W->act_right(fs2->apply(v), ba2->apply(y)),
                                             H.multiply(a2b->apply(x), a3->apply(z))));
             return out;
         }});
    return eqs;
}

// Both left-module identities; the nested one applies the inverse of psi, so
// callers must verify invertibility first.
std::vector<DirectEquation> left_jordan_equations(std::shared_ptr<const BiHomBimodule> W) {
    const BiHomAlgebra& A = *W->host();
    auto f3 = std::make_shared<LinearMap>(mat_pow(W->phi(), 3));
    auto f3s = std::make_shared<LinearMap>(mat_compose(mat_pow(W->phi(), 3), W->psi()));
    auto sif3 = std::make_shared<LinearMap>(mat_compose(mat_inverse(W->psi()), mat_pow(W->phi(), 3)));
    auto ab = std::make_shared<LinearMap>(mat_compose(A.alpha(), A.beta()));
    auto a2 = std::make_shared<LinearMap>(mat_pow(A.alpha(), 2));
    auto ab2 = std::make_shared<LinearMap>(mat_compose(A.alpha(), mat_pow(A.beta(), 2)));
    auto a2b = std::make_shared<LinearMap>(mat_compose(mat_pow(A.alpha(), 2), A.beta()));
    auto ba = std::make_shared<LinearMap>(mat_compose(A.beta(), A.alpha()));
    auto ba2 = std::make_shared<LinearMap>(mat_compose(A.beta(), mat_pow(A.alpha(), 2)));
    auto b2 = std::make_shared<LinearMap>(mat_pow(A.beta(), 2));
    auto b2a = std::make_shared<LinearMap>(mat_compose(mat_pow(A.beta(), 2), A.alpha()));
    auto b2a2 = std::make_shared<LinearMap>(mat_compose(mat_pow(A.beta(), 2), mat_pow(A.alpha(), 2)));

    std::vector<DirectEquation> eqs;
    eqs.push_back(
        {"left-jordan-cyclic", [W, f3, ab, a2, ab2, a2b, ba2, b2a2](const std::vector<Vec>& el) {
             const BiHomAlgebra& H = *W->host();
             const Vec fv = f3->apply(el[3]);
             auto term = [&](const Vec& x, const Vec& y, const Vec& z) {
                 Vec lhs = W->act_left(b2a2->apply(z),
                                       W->act_left(H.multiply(ab->apply(x), a2->apply(y)), fv));
                 Vec rhs = W->act_left(H.multiply(ab2->apply(x), a2b->apply(y)),
                                       W->act_left(ba2->apply(z), fv));
                 return vec_sub(lhs, rhs);
             };
             Vec sum = term(el[0], el[1], el[2]);
             sum = vec_add(sum, term(el[1], el[2], el[0]));
             return vec_add(sum, term(el[2], el[0], el[1]));
         }});
    eqs.push_back(
        {"left-jordan-nested",
         [W, f3, f3s, sif3, a2, ba, ba2, b2, b2a, b2a2](const std::vector<Vec>& el) {
             const BiHomAlgebra& H = *W->host();
             const Vec& x = el[0];
             const Vec& y = el[1];
             const Vec& z = el[2];
             const Vec& v = el[3];
             Vec out = W->act_left(
                 b2a2->apply(z),
                 W->act_left(ba2->apply(y), W->act_left(a2->apply(x), sif3->apply(v))));
             out = vec_add(out,
                           W->act_left(b2a2->apply(x), W->act_left(ba2->apply(y),
                                                                   W->act_left(a2->apply(z),
                                                                               sif3->apply(v)))));
             out = vec_add(out, W->act_left(H.multiply(H.multiply(b2->apply(x), ba->apply(z)),
                                                       ba2->apply(y)),
                                            f3s->apply(v)));
             out = vec_sub(out, W->act_left(H.multiply(b2a->apply(y), ba2->apply(z)),
                                            W->act_left(ba2->apply(x), f3->apply(v))));
             out = vec_sub(out, W->act_left(H.multiply(b2a->apply(y), ba2->apply(x)),
                                            W->act_left(ba2->apply(z), f3->apply(v))));
             out = vec_sub(out, W->act_left(H.multiply(b2a->apply(x), ba2->apply(z)),
                                            W->act_left(ba2->apply(y), f3->apply(v))));
             return out;
         }});
    return eqs;
}

using EquationFactory = std::vector<DirectEquation> (*)(std::shared_ptr<const BiHomBimodule>);

CheckReport check_jordan_module(const BiHomBimodule& V, const CheckMode& mode, const char* name,
                                EquationFactory factory) {
    CheckReport r;
    r.check_name = name;
    r.stats.strategy = strategy_label(mode);
    const std::size_t n = V.adim();
    const std::size_t m = V.mdim();
    if (mode.strategy == Strategy::Linearized) {
        auto W = std::make_shared<const BiHomBimodule>(V);
        std::vector<TupleEquation> eqs;
        for (DirectEquation& de : factory(W)) {
            auto residual = std::make_shared<std::function<Vec(const std::vector<Vec>&)>>(
                std::move(de.residual));
            eqs.push_back({de.name,
                           {n, n, n, m},
                           [W, residual](const std::vector<std::size_t>& t) {
                               const BiHomAlgebra& H = *W->host();
                               return (*residual)(
                                   {H.basis(t[0]), H.basis(t[1]), H.basis(t[2]), W->basis(t[3])});
                           }});
        }
        run_tuple_equations(r, eqs);
        r.note("both identities are multilinear, so the basis scan is complete");
        return r;
    }
    DirectSystem sys;
    sys.shape = {{"x", n}, {"y", n}, {"z", n}, {"v", m}};
    sys.make = [&V, factory](const ContextPtr& ctx, const std::vector<std::size_t>& where) {
        return factory(std::make_shared<const BiHomBimodule>(V.embed(ctx, where)));
    };
    run_direct(r, V.context(), mode, sys);
    return r;
}

}  // namespace

CheckReport check_right_jordan_module(const BiHomBimodule& V, const CheckMode& mode) {
    require_jordan_host(*V.host(), "the right Jordan-module check");
    return check_jordan_module(V, mode, "right-jordan-module", &right_jordan_equations);
}

CheckReport check_left_jordan_module(const BiHomBimodule& V, const CheckMode& mode) {
    require_jordan_host(*V.host(), "the left Jordan-module check");
    require_psi_invertible(V, "the left Jordan-module check");
    return check_jordan_module(V, mode, "left-jordan-module", &left_jordan_equations);
}

CheckReport check_right_special(const BiHomBimodule& V) {
    CheckReport r;
    r.check_name = "right-special";
    r.stats.strategy = "exhaustive";
    const BiHomAlgebra& A = *V.host();
    const std::size_t n = A.dim();
    const std::size_t m = V.mdim();
    const std::vector<Vec> a = columns_of(A.alpha());
    const std::vector<Vec> b = columns_of(A.beta());
    const std::vector<Vec> f = columns_of(V.phi());
    const std::vector<Vec> ba = columns_of(mat_compose(A.beta(), A.alpha()));
    const std::vector<Vec> ab = columns_of(mat_compose(A.alpha(), A.beta()));
    std::vector<TupleEquation> eqs;
    eqs.push_back({"right-special",
                   {m, n, n},
                   [&](const std::vector<std::size_t>& t) {
                       Vec lhs = V.act_right(f[t[0]], A.multiply(b[t[1]], a[t[2]]));
                       Vec rhs = vec_add(V.act_right(V.act_right(V.basis(t[0]), b[t[1]]), ba[t[2]]),
                                         V.act_right(V.act_right(V.basis(t[0]), b[t[2]]), ab[t[1]]));
                       return vec_sub(lhs, rhs);
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

CheckReport check_left_special(const BiHomBimodule& V) {
    require_psi_invertible(V, "the left-special check");
    CheckReport r;
    r.check_name = "left-special";
    r.stats.strategy = "exhaustive";
    const BiHomAlgebra& A = *V.host();
    const std::size_t n = A.dim();
    const std::size_t m = V.mdim();
    const std::vector<Vec> a = columns_of(A.alpha());
    const std::vector<Vec> b = columns_of(A.beta());
    const std::vector<Vec> s = columns_of(V.psi());
    const std::vector<Vec> ba = columns_of(mat_compose(A.beta(), A.alpha()));
    std::vector<TupleEquation> eqs;
    eqs.push_back({"left-special",
                   {n, n, m},
                   [&](const std::vector<std::size_t>& t) {
                       Vec lhs = V.act_left(A.multiply(b[t[0]], a[t[1]]), s[t[2]]);
                       Vec rhs = vec_add(V.act_left(ba[t[0]], V.act_left(a[t[1]], V.basis(t[2]))),
                                         V.act_left(ba[t[1]], V.act_left(a[t[0]], V.basis(t[2]))));
                       return vec_sub(lhs, rhs);
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

CheckReport check_jordan_bimodule(const BiHomBimodule& V) {
    require_jordan_host(*V.host(), "the Jordan-bimodule check");
    CheckReport r;
    r.check_name = "jordan-bimodule";
    r.stats.strategy = "exhaustive";
    const BiHomAlgebra& A = *V.host();
    const std::size_t n = A.dim();
    const std::size_t m = V.mdim();
    const std::vector<Vec> a = columns_of(A.alpha());
    const std::vector<Vec> b = columns_of(A.beta());
    const std::vector<Vec> f = columns_of(V.phi());
    const std::vector<Vec> s = columns_of(V.psi());
    const std::vector<Vec> ab = columns_of(mat_compose(A.alpha(), A.beta()));
    const std::vector<Vec> a3 = columns_of(mat_pow(A.alpha(), 3));
    const std::vector<Vec> ba = columns_of(mat_compose(A.beta(), A.alpha()));
    const std::vector<Vec> ba2 = columns_of(mat_compose(A.beta(), mat_pow(A.alpha(), 2)));
    const std::vector<Vec> b2 = columns_of(mat_pow(A.beta(), 2));
    const std::vector<Vec> f2s = columns_of(mat_compose(mat_pow(V.phi(), 2), V.psi()));
    const std::vector<Vec> f3 = columns_of(mat_pow(V.phi(), 3));
    const std::vector<Vec> s2 = columns_of(mat_pow(V.psi(), 2));
    std::vector<TupleEquation> eqs;
    eqs.push_back({"left-right-compatibility",
                   {n, m},
                   [&](const std::vector<std::size_t>& t) {
                       return vec_sub(V.act_left(b[t[0]], f[t[1]]), V.act_right(s[t[1]], a[t[0]]));
                   }});
    eqs.push_back({"jordan-cyclic",
                   {n, n, n, m},
                   [&](const std::vector<std::size_t>& t) {
                       auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
                           return module_associator(V, ModulePattern::AVA, A.multiply(b2[x], ab[y]),
                                                    f2s[t[3]], a3[z]);
                       };
                       Vec sum = term(t[0], t[1], t[2]);
                       sum = vec_add(sum, term(t[1], t[2], t[0]));
                       return vec_add(sum, term(t[2], t[0], t[1]));
                   }});
    eqs.push_back({"jordan-nested",
                   {n, n, n, m},
                   [&](const std::vector<std::size_t>& t) {
                       Vec out = module_associator(V, ModulePattern::VAA,
                                                   V.act_right(s2[t[3]], ba[t[0]]), ba2[t[1]], a3[t[2]]);
                       out = vec_add(out, module_associator(V, ModulePattern::VAA,
                                                            V.act_right(s2[t[3]], ba[t[2]]), ba2[t[1]],
                                                            a3[t[0]]));
                       return vec_add(out, module_associator(V, ModulePattern::AAV,
                                                             A.multiply(b2[t[0]], ba[t[2]]), ba2[t[1]],
                                                             f3[t[3]]));
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

CheckReport check_operator_commutativity(const BiHomAlgebra& host, std::size_t mdim,
                                         const std::vector<Scalar>& rho_l,
                                         const std::vector<Scalar>& rho_r) {
    const std::size_t n = host.dim();
    const ContextPtr& ctx = host.context();
    if (rho_l.size() != n * mdim * mdim)
        throw Error("DimensionMismatch", "left action tensor has " + std::to_string(rho_l.size()) +
                                             " entries, expected " + std::to_string(n * mdim * mdim));
    if (rho_r.size() != mdim * n * mdim)
        throw Error("DimensionMismatch", "right action tensor has " + std::to_string(rho_r.size()) +
                                             " entries, expected " + std::to_string(mdim * n * mdim));
    for (const Scalar& c : rho_l) require_same_context(ctx, c.context());
    for (const Scalar& c : rho_r) require_same_context(ctx, c.context());
    CheckReport r;
    r.check_name = "operator-commutativity";
    r.stats.strategy = "exhaustive";
    const std::vector<Vec> a = columns_of(host.alpha());
    const std::vector<Vec> b = columns_of(host.beta());
    std::vector<TupleEquation> eqs;
    eqs.push_back({"operator-commutativity",
                   {n, mdim, n},
                   [&](const std::vector<std::size_t>& t) {
                       Vec vp = unit_vec(ctx, mdim, t[1]);
                       Vec lhs = tensor_act_right(
                           ctx, n, mdim, rho_r,
                           tensor_act_left(ctx, n, mdim, rho_l, host.basis(t[0]), vp), b[t[2]]);
                       Vec rhs = tensor_act_left(ctx, n, mdim, rho_l, a[t[0]],
                                                 tensor_act_right(ctx, n, mdim, rho_r, vp,
                                                                  host.basis(t[2])));
                       return vec_sub(lhs, rhs);
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

BimoduleMorphism make_bimodule_morphism(BimodulePtr source, BimodulePtr target, LinearMap map) {
    if (!source || !target)
        throw Error("InvalidArgument", "morphism requires source and target bimodules");
    if (!same_algebra(source->host(), target->host()))
        throw Error("InvalidArgument", "bimodule morphism requires both carriers over the same host algebra");
    require_same_context(source->context(), map.context());
    if (map.rows() != target->mdim() || map.cols() != source->mdim())
        throw Error("DimensionMismatch", "morphism map is " + std::to_string(map.rows()) + "x" +
                                             std::to_string(map.cols()) + ", expected " +
                                             std::to_string(target->mdim()) + "x" +
                                             std::to_string(source->mdim()));
    return BimoduleMorphism{std::move(source), std::move(target), std::move(map)};
}

CheckReport check_bimodule_morphism(const BimoduleMorphism& f) {
    CheckReport r;
    r.check_name = "bimodule-morphism";
    r.stats.strategy = "exhaustive";
    const BiHomBimodule& S = *f.source;
    const BiHomBimodule& T = *f.target;
    const std::size_t n = S.adim();
    const std::size_t ms = S.mdim();
    const LinearMap phi_lhs = mat_compose(f.map, S.phi());
    const LinearMap phi_rhs = mat_compose(T.phi(), f.map);
    const LinearMap psi_lhs = mat_compose(f.map, S.psi());
    const LinearMap psi_rhs = mat_compose(T.psi(), f.map);
    std::vector<TupleEquation> eqs;
    eqs.push_back({"phi-equivariance",
                   {ms},
                   [&](const std::vector<std::size_t>& t) {
                       return vec_sub(phi_lhs.column(t[0]), phi_rhs.column(t[0]));
                   }});
    eqs.push_back({"psi-equivariance",
                   {ms},
                   [&](const std::vector<std::size_t>& t) {
                       return vec_sub(psi_lhs.column(t[0]), psi_rhs.column(t[0]));
                   }});
    eqs.push_back({"left-equivariance",
                   {n, ms},
                   [&](const std::vector<std::size_t>& t) {
                       const BiHomAlgebra& A = *S.host();
                       Vec lhs = f.map.apply(S.act_left(A.basis(t[0]), S.basis(t[1])));
                       Vec rhs = T.act_left(A.basis(t[0]), f.map.column(t[1]));
                       return vec_sub(lhs, rhs);
                   }});
    eqs.push_back({"right-equivariance",
                   {ms, n},
                   [&](const std::vector<std::size_t>& t) {
                       const BiHomAlgebra& A = *S.host();
                       Vec lhs = f.map.apply(S.act_right(S.basis(t[0]), A.basis(t[1])));
                       Vec rhs = T.act_right(f.map.column(t[0]), A.basis(t[1]));
                       return vec_sub(lhs, rhs);
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

}  // namespace bihom
