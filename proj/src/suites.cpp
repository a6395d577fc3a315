#include "bihom/suites.hpp"

#include <functional>
#include <utility>

#include "bihom/bimodule_constructions.hpp"
#include "bihom/catalog.hpp"
#include "bihom/checks.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"

namespace bihom {

namespace {

struct Verdict {
    bool threw = false;
    std::string kind;
    bool pass = false;

    bool operator==(const Verdict& o) const {
        return threw == o.threw && kind == o.kind && pass == o.pass;
    }
};

Verdict verdict_of(const std::function<CheckReport()>& fn) {
    Verdict v;
    try {
        v.pass = fn().pass;
    } catch (const Error& e) {
        v.threw = true;
        v.kind = e.kind();
    }
    return v;
}

std::string verdict_text(const Verdict& v) {
    if (v.threw) return "inapplicable (" + v.kind + ")";
    return v.pass ? "pass" : "fail";
}

bool tensors_equal(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!(x[k] == y[k])) return false;
    return true;
}

std::vector<AlgebraPtr> catalog_corpus(const ContextPtr& ctx) {
    return {example_e1_first(ctx),      example_e1_second(ctx), example_e5(ctx),
            catalog_octonions(ctx),     catalog_matrix2x2(ctx), catalog_jordan_sym2(ctx),
            catalog_rb_toy(ctx).first};
}

}  // namespace

SuiteResult suite_polarization(const ContextPtr& ctx) {
    SuiteResult suite;
    suite.name = "polarization";
    const CheckMode sampled = CheckMode::sampled(50, 2026);
    for (const AlgebraPtr& A : catalog_corpus(ctx)) {
        struct Named {
            const char* what;
            std::function<CheckReport(const CheckMode&)> run;
        };
        const std::vector<Named> checks = {
            {"left-alternative", [&](const CheckMode& m) { return check_left_alternative(*A, m); }},
            {"right-alternative", [&](const CheckMode& m) { return check_right_alternative(*A, m); }},
            {"bihom-jordan", [&](const CheckMode& m) { return check_bihom_jordan(*A, m); }},
        };
        for (const Named& c : checks) {
            Verdict lin = verdict_of([&] { return c.run(CheckMode::linearized()); });
            Verdict sym = verdict_of([&] { return c.run(CheckMode::symbolic()); });
            Verdict smp = verdict_of([&] { return c.run(sampled); });
            const bool agree = lin == sym && lin == smp;
            suite.add(agree, A->label() + ": " + c.what +
                                 " agrees across linearized/symbolic/sampled: " + verdict_text(lin));
        }
    }
    return suite;
}

SuiteResult suite_graph_morphism(const ContextPtr& ctx) {
    SuiteResult suite;
    suite.name = "graph-morphism";
    AlgebraPtr F = example_e1_first(ctx);
    AlgebraPtr O = catalog_octonions(ctx);
    AlgebraPtr J = catalog_jordan_sym2(ctx);

    LinearMap scale2 = LinearMap::identity(ctx, 2);
    scale2.set(0, 0, Scalar(ctx, 2L));
    scale2.set(1, 1, Scalar(ctx, 2L));
    LinearMap collapse(ctx, 2, 2);  // e1 -> e1, e2 -> e1
    collapse.set(0, 0, Scalar(ctx, 1L));
    collapse.set(0, 1, Scalar(ctx, 1L));
    LinearMap swap01 = LinearMap::identity(ctx, 8);
    swap01.set(0, 0, Scalar(ctx));
    swap01.set(1, 1, Scalar(ctx));
    swap01.set(0, 1, Scalar(ctx, 1L));
    swap01.set(1, 0, Scalar(ctx, 1L));

    struct Case {
        std::string what;
        AlgebraPtr host;
        LinearMap map;
        bool valid;
    };
    const std::vector<Case> cases = {
        {"identity on e1.first", F, LinearMap::identity(ctx, 2), true},
        {"alpha of e1.first", F, F->alpha(), true},
        {"flip on octonions", O, catalog_automorphism("flip", O), true},
        {"conj on jordan_sym2", J, catalog_automorphism("conj", J), true},
        {"scaling by 2 on e1.first", F, scale2, false},
        {"collapse onto e1 on e1.first", F, collapse, false},
        {"swap of the first two units on octonions", O, swap01, false},
    };
    for (const Case& c : cases) {
        AlgebraMorphism m = make_morphism(c.host, c.host, c.map);
        const bool mor = check_morphism(m).pass;
        AlgebraPtr sum = direct_sum(c.host, c.host);
        const bool graph = is_subalgebra(*sum, graph_subspace(m)).pass;
        const bool ok = mor == graph && mor == c.valid;
        suite.add(ok, c.what + ": morphism " + (mor ? "pass" : "fail") + ", graph subalgebra " +
                          (graph ? "pass" : "fail"));
    }
    return suite;
}

SuiteResult suite_implications(const ContextPtr& ctx) {
    SuiteResult suite;
    suite.name = "implications";

    // Regular actions over the symmetrized host are special on both sides and
    // therefore satisfy the one-sided Jordan module systems.
    for (const AlgebraPtr& A : {example_e1_first(ctx), catalog_octonions(ctx)}) {
        AlgebraPtr P = plus_algebra(A);
        BimodulePtr V = rehost_bimodule(regular_bimodule(A), P);
        const bool rs = check_right_special(*V).pass;
        const bool ls = check_left_special(*V).pass;
        suite.add(rs && ls, A->label() + ": regular actions over " + P->label() +
                                " are left and right special");
        const bool rj = check_right_jordan_module(*V).pass;
        const bool lj = check_left_jordan_module(*V).pass;
        suite.add(rj && lj,
                  A->label() + ": special actions satisfy both one-sided Jordan module systems");
    }

    // Associative bimodules have commuting left/right action operators.
    for (const AlgebraPtr& A :
         {example_e1_first(ctx), example_e1_second(ctx), catalog_matrix2x2(ctx)}) {
        BimodulePtr V = regular_bimodule(A);
        const bool assoc = check_assoc_bimodule(*V).pass;
        const bool oc =
            check_operator_commutativity(*A, V->mdim(), V->rho_l(), V->rho_r()).pass;
        suite.add(assoc && oc,
                  A->label() + ": associative bimodule has commuting action operators");
    }

    // Merging the two special regular actions of an associative algebra
    // yields exactly the regular Jordan module of its symmetrized host.
    AlgebraPtr M = catalog_matrix2x2(ctx);
    AlgebraPtr P = plus_algebra(M);
    BimodulePtr W = special_pair_to_jordan_bimodule(P, M->dim(), M->alpha(), M->beta(),
                                                    M->mu_tensor(), M->mu_tensor());
    const bool jb = check_jordan_bimodule(*W).pass;
    const bool regular_shape =
        tensors_equal(W->rho_l(), P->mu_tensor()) && tensors_equal(W->rho_r(), P->mu_tensor());
    suite.add(jb && regular_shape,
              "matrix2x2: merged special pair is the regular Jordan module of plus(matrix2x2)");
    return suite;
}

SuiteResult suite_sne_alternative(const ContextPtr& ctx) {
    SuiteResult suite;
    suite.name = "sne-alternative";
    AlgebraPtr O = catalog_octonions(ctx);
    BimodulePtr V = regular_bimodule(O);
    suite.add(check_alt_bimodule(*V).pass, "octonions: regular bimodule is alternative");

    bool shifts = true;
    for (std::size_t n = 0; n <= 2 && shifts; ++n)
        for (std::size_t m = 0; m <= 2 && shifts; ++m)
            shifts = check_alt_bimodule(*shift_bimodule(V, n, m)).pass;
    suite.add(shifts, "octonions: all action shifts with powers up to 2 stay alternative");

    const LinearMap flip = catalog_automorphism("flip", O);
    suite.add(check_alt_bimodule(*twist_bimodule(V, flip, flip, flip, flip)).pass,
              "octonions: bimodule twist along the flip automorphism stays alternative");

    AlgebraPtr Y = yau_twist(O, flip, flip);
    suite.add(check_left_alternative(*Y).pass && check_right_alternative(*Y).pass,
              "octonions: the flip twist of the algebra is left and right alternative");

    AlgebraPtr E = split_null_extension(O, V, "alternative");
    suite.add(E->dim() == 16 && check_left_alternative(*E).pass && check_right_alternative(*E).pass,
              "octonions: the dim-16 split null extension is left and right alternative");

    std::vector<Vec> carrier;
    for (std::size_t p = 0; p < 8; ++p) carrier.push_back(E->basis(8 + p));
    Subspace ideal(ctx, 16, carrier);
    suite.add(is_two_sided_ideal(*E, ideal).pass,
              "octonions: the embedded carrier is a two-sided ideal of the extension");

    QuotientResult q = quotient_with_projection(E, ideal);
    suite.add(q.algebra->dim() == 8 && tensors_equal(q.algebra->mu_tensor(), O->mu_tensor()) &&
                  q.algebra->alpha() == O->alpha() && q.algebra->beta() == O->beta(),
              "octonions: quotienting the extension by the carrier recovers the algebra");

    LinearMap section(ctx, 16, 8);
    for (std::size_t i = 0; i < 8; ++i) section.set(i, i, Scalar(ctx, 1L));
    suite.add(check_morphism(make_morphism(O, E, section)).pass,
              "octonions: the canonical section into the extension is a morphism");
    return suite;
}

SuiteResult suite_sne_jordan(const ContextPtr& ctx) {
    SuiteResult suite;
    suite.name = "sne-jordan";
    AlgebraPtr J = catalog_jordan_sym2(ctx);
    BimodulePtr V = regular_bimodule(J);
    suite.add(check_jordan_bimodule(*V).pass, "jordan_sym2: regular bimodule is Jordan");

    bool shifts = true;
    for (std::size_t k = 0; k <= 2 && shifts; ++k)
        shifts = check_jordan_bimodule(*jordan_shift_bimodule(V, k)).pass;
    suite.add(shifts, "jordan_sym2: action shifts with powers up to 2 stay Jordan");

    const LinearMap conj = catalog_automorphism("conj", J);
    BimodulePtr D = jordan_deform_bimodule(V, conj, conj, conj, conj);
    suite.add(check_jordan_bimodule(*D).pass,
              "jordan_sym2: conjugation deformation of the regular bimodule is Jordan");

    bool twisted_shifts = true;
    for (std::size_t k = 1; k <= 2 && twisted_shifts; ++k)
        twisted_shifts = check_jordan_bimodule(*jordan_shift_bimodule(D, k)).pass;
    suite.add(twisted_shifts, "jordan_sym2: shifts of the deformed bimodule stay Jordan");

    AlgebraPtr E = split_null_extension(J, V, "jordan");
    suite.add(E->dim() == 6 && check_bihom_commutative(*E).pass && check_bihom_jordan(*E).pass,
              "jordan_sym2: the dim-6 split null extension is commutative and Jordan");

    std::vector<Vec> carrier;
    for (std::size_t p = 0; p < 3; ++p) carrier.push_back(E->basis(3 + p));
    Subspace ideal(ctx, 6, carrier);
    QuotientResult q = quotient_with_projection(E, ideal);
    suite.add(is_two_sided_ideal(*E, ideal).pass &&
                  tensors_equal(q.algebra->mu_tensor(), J->mu_tensor()),
              "jordan_sym2: carrier ideal round trip recovers the algebra");
    return suite;
}

SuiteResult run_suite(const std::string& name, const ContextPtr& ctx) {
    if (name == "polarization") return suite_polarization(ctx);
    if (name == "graph-morphism") return suite_graph_morphism(ctx);
    if (name == "implications") return suite_implications(ctx);
    if (name == "sne-alternative") return suite_sne_alternative(ctx);
    if (name == "sne-jordan") return suite_sne_jordan(ctx);
    throw Error("UnknownTag", "no suite named '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"polarization", "graph-morphism", "implications", "sne-alternative", "sne-jordan"};
}

}  // namespace bihom
