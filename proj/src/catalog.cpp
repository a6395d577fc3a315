#include "bihom/catalog.hpp"

#include "bihom/constructions.hpp"
#include "bihom/error.hpp"

namespace bihom {

namespace {

// Signed multiplication table of the octonions: mu(e_i, e_j) = SGN[i][j] *
// e_{IDX[i][j]} with e_0 the unit and e_1..e_3 spanning a quaternion
// subalgebra together with it.
const int OCT_IDX[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4}, {4, 5, 6, 7, 0, 1, 2, 3}, {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0},
};
const int OCT_SGN[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},       {1, -1, 1, -1, 1, -1, -1, 1},  {1, -1, -1, 1, 1, 1, -1, -1},
    {1, 1, -1, -1, 1, -1, 1, -1},   {1, -1, -1, -1, -1, 1, 1, 1},  {1, 1, -1, 1, -1, -1, -1, 1},
    {1, 1, 1, -1, -1, 1, -1, -1},   {1, -1, 1, 1, -1, -1, 1, -1},
};

LinearMap diagonal(const ContextPtr& ctx, const std::vector<long>& entries) {
    LinearMap m(ctx, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, Scalar(ctx, entries[i]));
    return m;
}

// The shared 2-dimensional family behind e1.first and e5:
//   alpha = [1, 2a/(b-1); 0, -1],  beta = [1, -a; 0, b],
//   mu(e1,e1) = e1,                 mu(e1,e2) = -a e1 + b e2,
//   mu(e2,e1) = (2a/(b-1)) e1 - e2, mu(e2,e2) = -(a^2 (b-2)/(b-1)^2) e1 + a e2.
AlgebraPtr first_family(const std::string& label, const ContextPtr& ctx, const Scalar& a,
                        const Scalar& b) {
    const Scalar one(ctx, 1L), two(ctx, 2L);
    const Scalar bm1 = b - one;
    const Scalar c = two * a / bm1;
    std::vector<Scalar> mu(8, Scalar(ctx));
    auto set = [&](std::size_t i, std::size_t j, const Scalar& c1, const Scalar& c2) {
        mu[(i * 2 + j) * 2 + 0] = c1;
        mu[(i * 2 + j) * 2 + 1] = c2;
    };
    set(0, 0, one, Scalar(ctx));
    set(0, 1, -a, b);
    set(1, 0, c, -one);
    set(1, 1, -(a * a * (b - two)) / (bm1 * bm1), a);
    LinearMap alpha(ctx, 2, 2), beta(ctx, 2, 2);
    alpha.set(0, 0, one);
    alpha.set(0, 1, c);
    alpha.set(1, 1, -one);
    beta.set(0, 0, one);
    beta.set(0, 1, -a);
    beta.set(1, 1, b);
    return BiHomAlgebra::make(label, ctx, 2, std::move(mu), std::move(alpha), std::move(beta));
}

// The second family:
//   alpha = [1, b(1-a)/a; 0, a],   beta = [1, b; 0, 1-a],
//   mu(e1,e1) = e1,                mu(e1,e2) = b e1 + (1-a) e2,
//   mu(e2,e1) = (b(1-a)/a) e1 + a e2, mu(e2,e2) = (b/a) e2.
AlgebraPtr second_family(const ContextPtr& ctx, const Scalar& a, const Scalar& b) {
    const Scalar one(ctx, 1L);
    const Scalar d = b * (one - a) / a;
    std::vector<Scalar> mu(8, Scalar(ctx));
    auto set = [&](std::size_t i, std::size_t j, const Scalar& c1, const Scalar& c2) {
        mu[(i * 2 + j) * 2 + 0] = c1;
        mu[(i * 2 + j) * 2 + 1] = c2;
    };
    set(0, 0, one, Scalar(ctx));
    set(0, 1, b, one - a);
    set(1, 0, d, a);
    set(1, 1, Scalar(ctx), b / a);
    LinearMap alpha(ctx, 2, 2), beta(ctx, 2, 2);
    alpha.set(0, 0, one);
    alpha.set(0, 1, d);
    alpha.set(1, 1, a);
    beta.set(0, 0, one);
    beta.set(0, 1, b);
    beta.set(1, 1, one - a);
    return BiHomAlgebra::make("e1.second", ctx, 2, std::move(mu), std::move(alpha), std::move(beta));
}

Scalar symbolic_a(const ContextPtr& ctx) { return parse_scalar(ctx, "a"); }
Scalar symbolic_b(const ContextPtr& ctx) { return parse_scalar(ctx, "b"); }

}  // namespace

AlgebraPtr catalog_octonions(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8 * 8 * 8, Scalar(ctx));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            mu[(i * 8 + j) * 8 + static_cast<std::size_t>(OCT_IDX[i][j])] =
                Scalar(ctx, static_cast<long>(OCT_SGN[i][j]));
    return BiHomAlgebra::make("octonions", ctx, 8, std::move(mu), LinearMap::identity(ctx, 8),
                              LinearMap::identity(ctx, 8));
}

AlgebraPtr catalog_matrix2x2(const ContextPtr& ctx) {
    // Basis E11, E12, E21, E22 at indices 2*(r-1) + (c-1); E_rc E_kl = [c==k] E_rl.
    std::vector<Scalar> mu(4 * 4 * 4, Scalar(ctx));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (c == k) {
                        std::size_t i = 2 * r + c, j = 2 * k + l, t = 2 * r + l;
                        mu[(i * 4 + j) * 4 + t] = Scalar(ctx, 1L);
                    }
    return BiHomAlgebra::make("matrix2x2", ctx, 4, std::move(mu), LinearMap::identity(ctx, 4),
                              LinearMap::identity(ctx, 4));
}

AlgebraPtr catalog_jordan_sym2(const ContextPtr& ctx) {
    std::vector<Scalar> mu(27, Scalar(ctx));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
        mu[(i * 3 + j) * 3 + k] = Scalar(ctx, c);
    };
    const Rational half(1, 2);
    set(0, 0, 0, 1);
    set(0, 1, 1, half);
    set(1, 0, 1, half);
    set(1, 1, 0, 1);
    set(1, 1, 2, 1);
    set(1, 2, 1, half);
    set(2, 1, 1, half);
    set(2, 2, 2, 1);
    return BiHomAlgebra::make("jordan_sym2", ctx, 3, std::move(mu), LinearMap::identity(ctx, 3),
                              LinearMap::identity(ctx, 3));
}

std::pair<AlgebraPtr, LinearMap> catalog_rb_toy(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8, Scalar(ctx));
    mu[(0 * 2 + 0) * 2 + 1] = Scalar(ctx, 1L);
    AlgebraPtr A = BiHomAlgebra::make("rb_toy", ctx, 2, std::move(mu), LinearMap::identity(ctx, 2),
                                      LinearMap::identity(ctx, 2));
    return {A, diagonal(ctx, {0, 1})};
}

AlgebraPtr example_e1_first(const ContextPtr& ctx) {
    return first_family("e1.first", ctx, symbolic_a(ctx), symbolic_b(ctx));
}

AlgebraPtr example_e1_second(const ContextPtr& ctx) {
    return second_family(ctx, symbolic_a(ctx), symbolic_b(ctx));
}

std::pair<AlgebraPtr, AlgebraPtr> example_e1_pair(const ContextPtr& ctx) {
    return {example_e1_first(ctx), example_e1_second(ctx)};
}

AlgebraPtr example_e1_first_at(const Rational& a, const Rational& b) {
    if (b == 1) throw Error("ParameterExcluded", "the first parametric family requires b != 1");
    const ContextPtr& q = rational_context();
    return first_family("e1.first", q, Scalar(q, a), Scalar(q, b));
}

AlgebraPtr example_e1_second_at(const Rational& a, const Rational& b) {
    if (a == 0) throw Error("ParameterExcluded", "the second parametric family requires a != 0");
    const ContextPtr& q = rational_context();
    return second_family(q, Scalar(q, a), Scalar(q, b));
}

std::pair<AlgebraPtr, AlgebraPtr> example_e1_pair_at(const Rational& a, const Rational& b) {
    return {example_e1_first_at(a, b), example_e1_second_at(a, b)};
}

AlgebraPtr example_e5(const ContextPtr& ctx) {
    return first_family("e5", ctx, symbolic_a(ctx), symbolic_b(ctx));
}

AlgebraPtr example_e5_at(const Rational& a, const Rational& b) {
    if (b == 0 || b == 1)
        throw Error("ParameterExcluded", "this family requires b outside {0, 1}");
    const ContextPtr& q = rational_context();
    return first_family("e5", q, Scalar(q, a), Scalar(q, b));
}

LinearMap catalog_automorphism(const std::string& tag, const AlgebraPtr& host) {
    if (!host) throw Error("InvalidArgument", "automorphism lookup needs a host algebra");
    const ContextPtr& ctx = host->context();
    if (tag == "id") return LinearMap::identity(ctx, host->dim());
    if (tag == "flip" && host->label() == "octonions" && host->dim() == 8)
        return diagonal(ctx, {1, 1, 1, 1, -1, -1, -1, -1});
    if (tag == "conj" && host->label() == "matrix2x2" && host->dim() == 4)
        return diagonal(ctx, {1, -1, -1, 1});
    if (tag == "conj" && host->label() == "jordan_sym2" && host->dim() == 3)
        return diagonal(ctx, {1, -1, 1});
    throw Error("UnknownTag",
                "no built-in automorphism '" + tag + "' for '" + host->label() + "'");
}

AlgebraPtr catalog_algebra(const std::string& name, const ContextPtr& ctx) {
    if (name == "octonions") return catalog_octonions(ctx);
    if (name == "matrix2x2") return catalog_matrix2x2(ctx);
    if (name == "jordan_sym2") return catalog_jordan_sym2(ctx);
    if (name == "rb_toy") return catalog_rb_toy(ctx).first;
    if (name == "e1.first") return example_e1_first(ctx);
    if (name == "e1.second") return example_e1_second(ctx);
    if (name == "e5") return example_e5(ctx);
    throw Error("UnknownTag", "no catalog algebra named '" + name + "'");
}

LinearMap catalog_map(const std::string& name, const ContextPtr& ctx) {
    if (name == "rb_toy.op") return diagonal(ctx, {0, 1});
    throw Error("UnknownTag", "no catalog map named '" + name + "'");
}

std::vector<CatalogEntry> catalog_list() {
    return {
        {"octonions", "8-dim alternative, non-associative; identity twists; automorphism tag: flip"},
        {"matrix2x2", "4-dim associative on the unit-matrix basis; identity twists; tag: conj"},
        {"jordan_sym2", "3-dim commutative Jordan (symmetric 2x2 matrices); identity twists; tag: conj"},
        {"rb_toy", "2-dim nilpotent with weight-0 Rota-Baxter operator (see rb_toy.op)"},
        {"rb_toy.op", "the operator diag(0, 1) paired with rb_toy"},
        {"e1.first", "2-dim parametric family over Q(a, b) with nontrivial twists (b != 1)"},
        {"e1.second", "2-dim parametric family over Q(a, b) with nontrivial twists (a != 0)"},
        {"e5", "the first family under the exclusion b outside {0, 1}; regular"},
    };
}

std::vector<Erratum> erratum_ledger(const ContextPtr& ctx) {
    AlgebraPtr A = example_e5(ctx);
    AlgebraPtr P = plus_algebra(A);
    auto vec2 = [&](const std::string& c0, const std::string& c1) {
        return Vec{parse_scalar(ctx, c0), parse_scalar(ctx, c1)};
    };
    std::vector<Erratum> out;
    const char* names[2] = {"e1", "e2"};
    const std::string printed[4][2] = {
        {"(b-1)/b", "0"},
        {"a*(-1 + 1/b + 4/(b-1))", "b"},
        {"a*(1 + 1/b)", "b-1"},
        {"a^2*(3*b^2 + 11*b - 8)/(b-1)^2 + a^2*(1+b)/b", "-4*a*b^2/(b-1)"},
    };
    std::size_t k = 0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j, ++k) {
            out.push_back({"symmetrized product of e5",
                           std::string("mu'(") + names[i] + ", " + names[j] + ")",
                           vec2(printed[k][0], printed[k][1]), P->basis_product(i, j), ""});
        }
    }
    const LinearMap ainv = mat_inverse(A->alpha());
    const LinearMap binv = mat_inverse(A->beta());
    out.push_back({"inverse twists of e5", "alpha^-1(e1)", vec2("-1", "0"), ainv.column(0), ""});
    out.push_back({"inverse twists of e5", "alpha^-1(e2)", vec2("2*a/(b-1)", "1"), ainv.column(1), ""});
    out.push_back({"inverse twists of e5", "beta^-1(e1)", vec2("1/b", "0"), binv.column(0), ""});
    out.push_back({"inverse twists of e5", "beta^-1(e2)", vec2("a/b", "1"), binv.column(1), ""});
    out.push_back({"direct sum of the e1 pair", "transcribed table", {}, {},
                   "the transcribed sum table is written over a 2-element basis, but the sum of two "
                   "2-dimensional algebras is 4-dimensional; the artifact is kept for reference and "
                   "never used as an oracle"});
    return out;
}

std::string erratum_report(const ContextPtr& ctx) {
    const std::vector<Erratum> ledger = erratum_ledger(ctx);
    std::string out = "erratum ledger: transcribed table entries contradicted by exact recomputation\n";
    std::size_t k = 1;
    for (const Erratum& e : ledger) {
        out += "  [" + std::to_string(k++) + "] " + e.subject + ", " + e.entry + ": ";
        if (e.note.empty())
            out += "transcribed " + vec_str(e.transcribed) + ", recomputed " + vec_str(e.recomputed) +
                   "\n";
        else
            out += e.note + "\n";
    }
    return out;
}

}  // namespace bihom
