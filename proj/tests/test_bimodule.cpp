#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "bihom/bimodule_constructions.hpp"
#include "bihom/checks.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"

using namespace bihom;

namespace {

Scalar S(const ContextPtr& ctx, const std::string& text) { return parse_scalar(ctx, text); }

std::string kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

bool tensors_equal(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!(x[k] == y[k])) return false;
    }
    return true;
}

AlgebraPtr parametric2(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8, Scalar(ctx));
    auto set = [&](std::size_t i, std::size_t j, const std::string& c1, const std::string& c2) {
        mu[(i * 2 + j) * 2 + 0] = S(ctx, c1);
        mu[(i * 2 + j) * 2 + 1] = S(ctx, c2);
    };
    set(0, 0, "1", "0");
    set(0, 1, "-a", "b");
    set(1, 0, "2*a/(b-1)", "-1");
    set(1, 1, "-a^2*(b-2)/(b-1)^2", "a");
    LinearMap alpha = LinearMap::from_rows(ctx, std::vector<std::vector<Scalar>>{
                                                    {S(ctx, "1"), S(ctx, "2*a/(b-1)")},
                                                    {S(ctx, "0"), S(ctx, "-1")}});
    LinearMap beta = LinearMap::from_rows(
        ctx, std::vector<std::vector<Scalar>>{{S(ctx, "1"), S(ctx, "-a")}, {S(ctx, "0"), S(ctx, "b")}});
    return BiHomAlgebra::make("parametric2", ctx, 2, std::move(mu), std::move(alpha), std::move(beta));
}

AlgebraPtr skew_toy(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8, Scalar(ctx));
    mu[(0 * 2 + 0) * 2 + 1] = Scalar(ctx, 1L);
    mu[(1 * 2 + 0) * 2 + 0] = Scalar(ctx, 1L);
    return BiHomAlgebra::make("skew-toy", ctx, 2, std::move(mu), LinearMap::identity(ctx, 2),
                              LinearMap::identity(ctx, 2));
}

// Symmetric 2x2 matrices under the half-anticommutator, identity twists.
AlgebraPtr sym2(const ContextPtr& ctx) {
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
    return BiHomAlgebra::make("sym2", ctx, 3, std::move(mu), LinearMap::identity(ctx, 3),
                              LinearMap::identity(ctx, 3));
}

// Q[x]/(x^2): e1 = 1, e2 = x.
AlgebraPtr dual_numbers(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8, Scalar(ctx));
    mu[(0 * 2 + 0) * 2 + 0] = Scalar(ctx, 1L);
    mu[(0 * 2 + 1) * 2 + 1] = Scalar(ctx, 1L);
    mu[(1 * 2 + 0) * 2 + 1] = Scalar(ctx, 1L);
    return BiHomAlgebra::make("dual-numbers", ctx, 2, std::move(mu), LinearMap::identity(ctx, 2),
                              LinearMap::identity(ctx, 2));
}

// mu(e1,e1) = e2, everything else zero; identity twists.
AlgebraPtr nilpotent_toy(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8, Scalar(ctx));
    mu[(0 * 2 + 0) * 2 + 1] = Scalar(ctx, 1L);
    return BiHomAlgebra::make("nil-toy", ctx, 2, std::move(mu), LinearMap::identity(ctx, 2),
                              LinearMap::identity(ctx, 2));
}

// One-dimensional carrier over `host` where every basis element acts (on both
// sides) by its first coordinate.
BimodulePtr weight_module(const AlgebraPtr& host) {
    const ContextPtr& ctx = host->context();
    const std::size_t n = host->dim();
    std::vector<Scalar> rl(n, Scalar(ctx)), rr(n, Scalar(ctx));
    rl[0] = Scalar(ctx, 1L);
    rr[0] = Scalar(ctx, 1L);
    return BiHomBimodule::make("weight", host, 1, LinearMap::identity(ctx, 1),
                               LinearMap::identity(ctx, 1), std::move(rl), std::move(rr));
}

}  // namespace

TEST_CASE("bimodule construction checks shapes, twists and structure maps") {
    auto q = rational_context();
    AlgebraPtr T = skew_toy(q);
    const std::vector<Scalar> zl(8, Scalar(q)), zr(8, Scalar(q));
    LinearMap id2 = LinearMap::identity(q, 2);
    LinearMap swap = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    LinearMap diag = LinearMap::from_rows(q, std::vector<std::vector<long>>{{1, 0}, {0, 2}});

    CHECK(kind_of([&] { BiHomBimodule("ok", T, 2, id2, id2, zl, zr); }).empty());
    CHECK(kind_of([&] { BiHomBimodule("bad", T, 2, swap, diag, zl, zr); }) == "NonCommutingMaps");
    CHECK(kind_of([&] { BiHomBimodule("bad", T, 2, id2, id2, std::vector<Scalar>(7, Scalar(q)), zr); }) ==
          "DimensionMismatch");
    CHECK(kind_of([&] { BiHomBimodule("bad", nullptr, 2, id2, id2, zl, zr); }) == "InvalidArgument");

    // Identity carrier twists cannot intertwine the regular actions of an
    // algebra with a nontrivial alpha.
    auto ab = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ab);
    CHECK(kind_of([&] {
              BiHomBimodule("bad", A, 2, LinearMap::identity(ab, 2), LinearMap::identity(ab, 2),
                            A->mu_tensor(), A->mu_tensor());
          }) == "ModuleMorphismFailed");
    // The algebra's own twists do intertwine them.
    CHECK(kind_of([&] { BiHomBimodule("ok", A, 2, A->alpha(), A->beta(), A->mu_tensor(), A->mu_tensor()); })
              .empty());
    // Maps over a foreign context are rejected.
    CHECK(kind_of([&] {
              BiHomBimodule("bad", A, 2, LinearMap::identity(q, 2), LinearMap::identity(q, 2),
                            A->mu_tensor(), A->mu_tensor());
          }) == "ContextMismatch");
}

TEST_CASE("regular bimodule associators coincide with the algebra associator") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    BimodulePtr V = regular_bimodule(A);
    CHECK(V->label() == "regular(parametric2)");
    CHECK(V->mdim() == 2);

    Vec x = {S(ctx, "a"), S(ctx, "1")};
    Vec y = {S(ctx, "b"), S(ctx, "-1")};
    Vec v = {S(ctx, "a+b"), S(ctx, "2")};
    Vec expected = A->associator(x, y, v);
    CHECK(vec_eq(module_associator(*V, ModulePattern::AAV, x, y, v), expected));
    CHECK(vec_eq(module_associator(*V, ModulePattern::AVA, x, y, v), expected));
    CHECK(vec_eq(module_associator(*V, ModulePattern::VAA, x, y, v), expected));

    // act_left/act_right are the product itself.
    CHECK(vec_eq(V->act_left(x, v), A->multiply(x, v)));
    CHECK(vec_eq(V->act_right(v, x), A->multiply(v, x)));
}

TEST_CASE("module associator rejects arguments in the wrong slots") {
    auto q = rational_context();
    AlgebraPtr D = dual_numbers(q);
    BimodulePtr VI = ideal_bimodule(D, Subspace(q, 2, {D->basis(1)}));
    REQUIRE(VI->mdim() == 1);
    Vec big = {Scalar(q, 1L), Scalar(q, 1L)};
    Vec small = {Scalar(q, 1L)};
    CHECK(kind_of([&] { module_associator(*VI, ModulePattern::VAA, big, big, big); }) ==
          "PatternMismatch");
    CHECK(kind_of([&] { module_associator(*VI, ModulePattern::AAV, big, big, big); }) ==
          "PatternMismatch");
    CHECK(kind_of([&] { module_associator(*VI, ModulePattern::VAA, small, big, big); }).empty());
}

TEST_CASE("associativity bimodule check: clean pass and least witness") {
    auto ctx = make_context({"a", "b"});
    CheckReport good = check_assoc_bimodule(*regular_bimodule(parametric2(ctx)));
    CHECK(good.pass);
    CHECK(good.stats.tuples == 24);
    CHECK(good.stats.strategy == "exhaustive");

    CheckReport bad = check_assoc_bimodule(*regular_bimodule(skew_toy(rational_context())));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 3);
    CHECK(bad.witnesses[0].equation == "left-associative");
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0, 0});
    CHECK(bad.witnesses[0].residual == "(1, 0)");
    CHECK(bad.witnesses[1].equation == "middle-associative");
    CHECK(bad.witnesses[2].equation == "right-associative");
}

TEST_CASE("alternative bimodule check agrees across all three modes") {
    auto ctx = make_context({"a", "b"});
    BimodulePtr V = regular_bimodule(parametric2(ctx));

    CheckReport lin = check_alt_bimodule(*V);
    CHECK(lin.pass);
    CHECK(lin.stats.tuples == 32);

    CheckReport sym = check_alt_bimodule(*V, CheckMode::symbolic());
    CHECK(sym.pass);
    CHECK(sym.stats.tuples == 18);

    CheckReport smp = check_alt_bimodule(*V, CheckMode::sampled(20, 7));
    CHECK(smp.pass);
    CHECK(smp.stats.tuples == 36);

    BimodulePtr W = regular_bimodule(skew_toy(rational_context()));
    CheckReport bad = check_alt_bimodule(*W);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 4);
    CHECK(bad.witnesses[0].equation == "left-alternative-polarized");
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0, 0});
    CHECK(bad.witnesses[0].residual == "(2, 0)");
    CHECK(bad.witnesses[2].equation == "left-slot-exchange");

    CheckReport bad_sym = check_alt_bimodule(*W, CheckMode::symbolic());
    CHECK_FALSE(bad_sym.pass);
    REQUIRE(bad_sym.witnesses.size() == 4);
    CHECK(bad_sym.witnesses[0].equation == "left-alternative-quadratic");
    CHECK(bad_sym.witnesses[0].location == "generic elements x, v");
    REQUIRE(bad_sym.notes.size() == 1);

    CheckReport bad_smp = check_alt_bimodule(*W, CheckMode::sampled());
    CHECK_FALSE(bad_smp.pass);
}

TEST_CASE("Jordan module checks on the regular module of a Jordan algebra") {
    auto q = rational_context();
    AlgebraPtr J = sym2(q);
    BimodulePtr V = regular_bimodule(J);

    CheckReport right = check_right_jordan_module(*V);
    CHECK(right.pass);
    CHECK(right.stats.tuples == 162);
    CHECK(check_right_jordan_module(*V, CheckMode::symbolic()).pass);
    CHECK(check_right_jordan_module(*V, CheckMode::sampled(25, 11)).pass);

    CheckReport left = check_left_jordan_module(*V);
    CHECK(left.pass);
    CHECK(check_left_jordan_module(*V, CheckMode::symbolic()).pass);

    // A non-commutative host is rejected before any module equation runs.
    CHECK(kind_of([&] { check_right_jordan_module(*regular_bimodule(skew_toy(q))); }) == "PrereqFailed");

    // The left identities need the inverse of psi.
    const std::vector<Scalar> zl(3, Scalar(q)), zr(3, Scalar(q));
    BimodulePtr sing = BiHomBimodule::make("degenerate", J, 1, LinearMap::identity(q, 1),
                                           LinearMap(q, 1, 1), zl, zr);
    CHECK(kind_of([&] { check_left_jordan_module(*sing); }) == "PsiNotInvertible");
    CHECK(kind_of([&] { check_left_special(*sing); }) == "PsiNotInvertible");
    CHECK(check_right_jordan_module(*sing).pass);  // the zero action satisfies everything
}

TEST_CASE("nested module identities fail on a weight action that ignores products") {
    auto q = rational_context();
    BimodulePtr W = weight_module(sym2(q));

    CheckReport jb = check_jordan_bimodule(*W);
    CHECK_FALSE(jb.pass);
    REQUIRE(jb.witnesses.size() == 1);
    CHECK(jb.witnesses[0].equation == "jordan-nested");
    CHECK(jb.witnesses[0].tuple == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK(jb.witnesses[0].residual == "((-1)/(2))");

    CheckReport right = check_right_jordan_module(*W);
    CHECK_FALSE(right.pass);
    REQUIRE(right.witnesses.size() == 1);
    CHECK(right.witnesses[0].equation == "right-jordan-nested");
    CHECK(right.witnesses[0].tuple == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK(right.witnesses[0].residual == "((-1)/(2))");

    CheckReport left = check_left_jordan_module(*W);
    CHECK_FALSE(left.pass);
    REQUIRE(left.witnesses.size() == 1);
    CHECK(left.witnesses[0].equation == "left-jordan-nested");
    CHECK(left.witnesses[0].tuple == std::vector<std::size_t>{0, 1, 1, 0});
    CHECK(left.witnesses[0].residual == "((-1)/(2))");

    CheckReport rsym = check_right_jordan_module(*W, CheckMode::symbolic());
    CHECK_FALSE(rsym.pass);
    REQUIRE(rsym.witnesses.size() == 1);
    CHECK(rsym.witnesses[0].equation == "right-jordan-nested");
    CHECK(rsym.witnesses[0].location == "generic elements x, y, z, v");
    CHECK_FALSE(check_right_jordan_module(*W, CheckMode::sampled()).pass);
}

TEST_CASE("special actions over the symmetrized product of an associative algebra") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    AlgebraPtr P = plus_algebra(A);
    BimodulePtr V = rehost_bimodule(regular_bimodule(A), P);
    CHECK(V->label() == "rehost(regular(parametric2))");

    CheckReport right = check_right_special(*V);
    CHECK(right.pass);
    CHECK(right.stats.tuples == 8);
    CHECK(check_left_special(*V).pass);

    // The regular module of a Jordan algebra is not special: its nested
    // products collapse too early.
    CheckReport bad = check_right_special(*regular_bimodule(sym2(rational_context())));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].equation == "right-special");
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0, 0});
    CHECK(bad.witnesses[0].residual == "(-1, 0, 0)");

    CheckReport badl = check_left_special(*regular_bimodule(sym2(rational_context())));
    CHECK_FALSE(badl.pass);
    CHECK(badl.witnesses[0].equation == "left-special");
    CHECK(badl.witnesses[0].residual == "(-1, 0, 0)");
}

TEST_CASE("Jordan bimodule check passes on the regular module") {
    auto q = rational_context();
    CheckReport r = check_jordan_bimodule(*regular_bimodule(sym2(q)));
    CHECK(r.pass);
    CHECK(r.stats.tuples == 9 + 81 + 81);
    CHECK(kind_of([&] { check_jordan_bimodule(*regular_bimodule(skew_toy(q))); }) == "PrereqFailed");
}

TEST_CASE("operator commutativity of a left and right action pair") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    CheckReport good = check_operator_commutativity(*A, 2, A->mu_tensor(), A->mu_tensor());
    CHECK(good.pass);
    CHECK(good.stats.tuples == 8);

    AlgebraPtr T = skew_toy(rational_context());
    CheckReport bad = check_operator_commutativity(*T, 2, T->mu_tensor(), T->mu_tensor());
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0, 0});
    CHECK(bad.witnesses[0].residual == "(1, 0)");

    CHECK(kind_of([&] {
              check_operator_commutativity(*T, 2, std::vector<Scalar>(7, Scalar(T->context())),
                                           T->mu_tensor());
          }) == "DimensionMismatch");
}

TEST_CASE("bimodule morphisms: equivariance witnesses and construction guards") {
    auto q = rational_context();
    AlgebraPtr T = skew_toy(q);
    BimodulePtr V = regular_bimodule(T);

    BimoduleMorphism ident = make_bimodule_morphism(V, V, LinearMap::identity(q, 2));
    CheckReport ok = check_bimodule_morphism(ident);
    CHECK(ok.pass);
    CHECK(ok.stats.tuples == 2 + 2 + 4 + 4);

    LinearMap twice = LinearMap::from_rows(q, std::vector<std::vector<long>>{{2, 0}, {0, 2}});
    CHECK(check_bimodule_morphism(make_bimodule_morphism(V, V, twice)).pass);

    LinearMap swap = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    CheckReport bad = check_bimodule_morphism(make_bimodule_morphism(V, V, swap));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].equation == "left-equivariance");
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0});
    CHECK(bad.witnesses[0].residual == "(1, 0)");

    auto ab = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ab);
    BimodulePtr VA = regular_bimodule(A);
    BimodulePtr VP = rehost_bimodule(VA, plus_algebra(A));
    CHECK(kind_of([&] { make_bimodule_morphism(VA, VP, LinearMap::identity(ab, 2)); }) ==
          "InvalidArgument");
    CHECK(kind_of([&] { make_bimodule_morphism(VA, VA, LinearMap(ab, 1, 2)); }) == "DimensionMismatch");
}

TEST_CASE("ideal carriers and carriers pulled back along surjections") {
    auto q = rational_context();
    AlgebraPtr D = dual_numbers(q);

    BimodulePtr VI = ideal_bimodule(D, Subspace(q, 2, {D->basis(1)}));
    CHECK(VI->label() == "ideal(dual-numbers)");
    REQUIRE(VI->mdim() == 1);
    CHECK(VI->l(0, 0, 0) == Scalar(q, 1L));
    CHECK(VI->l(1, 0, 0) == Scalar(q, 0L));
    CHECK(VI->r(0, 0, 0) == Scalar(q, 1L));
    CHECK(VI->r(0, 1, 0) == Scalar(q, 0L));
    CHECK(check_assoc_bimodule(*VI).pass);
    CHECK(kind_of([&] { ideal_bimodule(D, Subspace(q, 2, {D->basis(0)})); }) == "NotAnIdeal");

    QuotientResult res = quotient_with_projection(D, Subspace(q, 2, {D->basis(1)}));
    BimodulePtr VS = bimodule_via_surjection(res.projection);
    CHECK(VS->mdim() == 1);
    CHECK(same_algebra(VS->host(), D));
    CHECK(VS->l(0, 0, 0) == Scalar(q, 1L));
    CHECK(VS->l(1, 0, 0) == Scalar(q, 0L));
    CHECK(check_assoc_bimodule(*VS).pass);

    CHECK(kind_of([&] { bimodule_via_surjection(make_morphism(D, D, LinearMap(q, 2, 2))); }) ==
          "NotSurjective");
    LinearMap swap = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    CHECK(kind_of([&] { bimodule_via_surjection(make_morphism(D, D, swap)); }) == "NotAMorphism");
}

TEST_CASE("action shifts by twist powers preserve the alternative identities") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    BimodulePtr V = regular_bimodule(A);

    BimodulePtr same = shift_bimodule(V, 0, 0);
    CHECK(tensors_equal(same->rho_l(), V->rho_l()));
    CHECK(tensors_equal(same->rho_r(), V->rho_r()));

    BimodulePtr S1 = shift_bimodule(V, 1, 0);
    // The new left action multiplies by alpha of the algebra argument.
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t p = 0; p < 2; ++p) {
            Vec expect = A->multiply(A->alpha().column(i), A->basis(p));
            for (std::size_t qq = 0; qq < 2; ++qq) CHECK(S1->l(i, p, qq) == expect[qq]);
        }
    }
    CHECK(check_alt_bimodule(*S1).pass);
    CHECK(check_alt_bimodule(*shift_bimodule(V, 1, 2)).pass);

    CHECK(kind_of([&] { shift_bimodule(regular_bimodule(skew_toy(rational_context())), 1, 0); }) ==
          "PrereqFailed");
}

TEST_CASE("twisting a bimodule along endomorphisms of algebra and carrier") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    BimodulePtr V = regular_bimodule(A);
    LinearMap id2 = LinearMap::identity(ctx, 2);

    // Identity maps reproduce the same structure.
    BimodulePtr copy = twist_bimodule(V, id2, id2, id2, id2);
    CHECK(tensors_equal(copy->rho_l(), V->rho_l()));
    CHECK(tensors_equal(copy->rho_r(), V->rho_r()));
    CHECK(copy->phi() == V->phi());
    CHECK(tensors_equal(copy->host()->mu_tensor(), A->mu_tensor()));

    // Twisting by the algebra's own maps lands over the power twist.
    BimodulePtr W = twist_bimodule(V, A->alpha(), A->beta(), A->alpha(), A->beta());
    CHECK(W->phi() == mat_pow(A->alpha(), 2));
    CHECK(tensors_equal(W->host()->mu_tensor(), power_twist(A, 1)->mu_tensor()));
    CHECK(check_alt_bimodule(*W).pass);

    // A carrier map that is not action-compatible is rejected.
    CHECK(kind_of([&] { twist_bimodule(V, id2, id2, A->beta(), id2); }) == "IntertwiningFailed");

    // Module maps must commute with the carrier twists.
    auto q = rational_context();
    BimodulePtr T = regular_bimodule(skew_toy(q));
    LinearMap swap = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    LinearMap diag = LinearMap::from_rows(q, std::vector<std::vector<long>>{{1, 0}, {0, 2}});
    LinearMap idq = LinearMap::identity(q, 2);
    CHECK(kind_of([&] { twist_bimodule(T, idq, idq, swap, diag); }) == "NonCommutingMaps");
}

TEST_CASE("power twists verify the mixed intertwining conditions") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    BimodulePtr V = regular_bimodule(A);

    BimodulePtr W = twist_bimodule_powers(V, 1, 0, 1, 0, 1, 0);
    CHECK(W->phi() == mat_pow(A->alpha(), 2));
    CHECK(W->psi() == A->beta());
    CHECK(W->host()->alpha() == mat_pow(A->alpha(), 2));
    CHECK(check_alt_bimodule(*W).pass);

    // Mismatched powers on the carrier and algebra sides are incompatible
    // unless the maps intertwine, which a nontrivial alpha rules out.
    CHECK(kind_of([&] { twist_bimodule_powers(V, 0, 0, 0, 0, 1, 0); }) == "IntertwiningFailed");
}

TEST_CASE("Rota-Baxter deformation of algebra and actions together") {
    auto q = rational_context();
    AlgebraPtr N = nilpotent_toy(q);
    BimodulePtr V = regular_bimodule(N);
    LinearMap R = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 0}, {0, 1}});

    BimodulePtr W = rb_twist_bimodule(V, R);
    CHECK(W->host()->label() == "rb-deform(nil-toy)");
    for (const Scalar& c : W->rho_l()) CHECK(c.is_zero());
    for (const Scalar& c : W->rho_r()) CHECK(c.is_zero());
    CHECK(check_assoc_bimodule(*W).pass);

    CHECK(kind_of([&] { rb_twist_bimodule(V, LinearMap::identity(q, 2)); }) == "NotRotaBaxter");
}

TEST_CASE("deforming a classical Jordan bimodule and shifting the result") {
    auto q = rational_context();
    AlgebraPtr J = sym2(q);
    BimodulePtr V = regular_bimodule(J);
    LinearMap conj = LinearMap::from_rows(q, std::vector<std::vector<long>>{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}});

    BimodulePtr D = jordan_deform_bimodule(V, conj, conj, conj, conj);
    CHECK(D->host()->alpha() == conj);
    CHECK(D->phi() == conj);
    CHECK(check_jordan_bimodule(*D).pass);

    BimodulePtr DP = jordan_deform_bimodule_powers(V, conj, conj, conj, conj, 1);
    CHECK(check_jordan_bimodule(*DP).pass);

    BimodulePtr Sh = jordan_shift_bimodule(D, 1);
    CHECK(check_jordan_bimodule(*Sh).pass);
    BimodulePtr Sh0 = jordan_shift_bimodule(D, 0);
    CHECK(tensors_equal(Sh0->rho_l(), D->rho_l()));

    // Deforming an already twisted module is rejected.
    CHECK(kind_of([&] { jordan_deform_bimodule(D, conj, conj, conj, conj); }) == "PrereqFailed");
    // Identity carrier maps cannot intertwine a nontrivial algebra map.
    LinearMap id3 = LinearMap::identity(q, 3);
    CHECK(kind_of([&] { jordan_deform_bimodule(V, conj, conj, id3, id3); }) == "IntertwiningFailed");
    // The shift demands a Jordan bimodule.
    CHECK(kind_of([&] { jordan_shift_bimodule(weight_module(J), 1); }) == "PrereqFailed");
}

TEST_CASE("merging special left and right actions into a Jordan bimodule") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    AlgebraPtr P = plus_algebra(A);

    BimodulePtr W =
        special_pair_to_jordan_bimodule(P, 2, A->alpha(), A->beta(), A->mu_tensor(), A->mu_tensor());
    CHECK(W->label() == "pair-module(plus(parametric2))");
    CHECK(check_jordan_bimodule(*W).pass);
    // For the regular actions the merged module is the regular module of the
    // symmetrized product.
    CHECK(tensors_equal(W->rho_l(), P->mu_tensor()));
    CHECK(tensors_equal(W->rho_r(), P->mu_tensor()));

    // A singular twist on the host is rejected up front.
    auto q = rational_context();
    std::vector<Scalar> zero_mu(8, Scalar(q));
    AlgebraPtr Z = BiHomAlgebra::make("flat", q, 2, zero_mu, LinearMap(q, 2, 2),
                                      LinearMap::identity(q, 2));
    CHECK(kind_of([&] {
              special_pair_to_jordan_bimodule(Z, 1, LinearMap::identity(q, 1), LinearMap::identity(q, 1),
                                              std::vector<Scalar>(2, Scalar(q)),
                                              std::vector<Scalar>(2, Scalar(q)));
          }) == "NotRegular");

    // Carrier twists must both be invertible.
    AlgebraPtr J = sym2(q);
    CHECK(kind_of([&] {
              special_pair_to_jordan_bimodule(J, 1, LinearMap(q, 1, 1), LinearMap::identity(q, 1),
                                              std::vector<Scalar>(3, Scalar(q)),
                                              std::vector<Scalar>(3, Scalar(q)));
          }) == "PhiPsiNotInvertible");

    // The regular right action of a Jordan algebra is not right special.
    BimodulePtr VJ = regular_bimodule(J);
    CHECK(kind_of([&] {
              special_pair_to_jordan_bimodule(J, 3, LinearMap::identity(q, 3), LinearMap::identity(q, 3),
                                              std::vector<Scalar>(27, Scalar(q)), VJ->rho_r());
          }) == "PrereqFailed");
}

TEST_CASE("split null extension: structure, ideal round trip and closures") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    BimodulePtr V = regular_bimodule(A);
    AlgebraPtr E = split_null_extension(A, V, "alternative");
    CHECK(E->label() == "sne(parametric2, regular(parametric2))");
    REQUIRE(E->dim() == 4);

    // Block structure: algebra block, two action blocks, zero square block.
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(E->mu(i, j, k) == A->mu(i, j, k));
                CHECK(E->mu(i, j, 2 + k).is_zero());
                CHECK(E->mu(i, 2 + j, 2 + k) == V->l(i, j, k));
                CHECK(E->mu(2 + i, j, 2 + k) == V->r(i, j, k));
                CHECK(E->mu(i, 2 + j, k).is_zero());
            }
        }
    }
    CHECK(vec_is_zero(E->basis_product(2, 3)));

    CHECK(validate(*E).pass);
    CHECK(check_bihom_associative(*E).pass);
    CHECK(check_left_alternative(*E).pass);
    CHECK(check_right_alternative(*E).pass);

    // The carrier embeds as a square-zero two-sided ideal and the quotient
    // recovers the original algebra.
    Subspace embedded(ctx, 4, {E->basis(2), E->basis(3)});
    CHECK(is_two_sided_ideal(*E, embedded).pass);
    QuotientResult qres = quotient_with_projection(E, embedded);
    REQUIRE(qres.algebra->dim() == 2);
    CHECK(tensors_equal(qres.algebra->mu_tensor(), A->mu_tensor()));
    LinearMap section = LinearMap::from_rows(
        ctx, std::vector<std::vector<long>>{{1, 0}, {0, 1}, {0, 0}, {0, 0}});
    CHECK(check_morphism(make_morphism(A, E, section)).pass);

    // Jordan variant.
    auto q = rational_context();
    AlgebraPtr J = sym2(q);
    AlgebraPtr EJ = split_null_extension(J, regular_bimodule(J), "jordan");
    REQUIRE(EJ->dim() == 6);
    CHECK(check_bihom_commutative(*EJ).pass);
    CHECK(check_bihom_jordan(*EJ).pass);

    // Guards.
    AlgebraPtr T = skew_toy(q);
    CHECK(kind_of([&] { split_null_extension(T, regular_bimodule(T), "alternative"); }) ==
          "PrereqFailed");
    CHECK(kind_of([&] { split_null_extension(A, V, "assoc"); }) == "InvalidArgument");
    CHECK(kind_of([&] { split_null_extension(plus_algebra(A), V, "alternative"); }) ==
          "InvalidArgument");
}

TEST_CASE("rehosting keeps the carrier but validates against the new host") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    BimodulePtr V = regular_bimodule(A);
    CHECK(kind_of([&] { rehost_bimodule(V, skew_toy(rational_context())); }) == "ContextMismatch");
    CHECK(kind_of([&] { rehost_bimodule(V, BiHomAlgebra::make("tiny", ctx, 1,
                                                              {Scalar(ctx, 1L)},
                                                              LinearMap::identity(ctx, 1),
                                                              LinearMap::identity(ctx, 1))); }) ==
          "DimensionMismatch");
}
