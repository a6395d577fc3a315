#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "bihom/checks.hpp"
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

// 2-dim algebra over Q(a,b): e1*e1 = e1, e1*e2 = -a e1 + b e2,
// e2*e1 = (2a/(b-1)) e1 - e2, e2*e2 = -a^2(b-2)/(b-1)^2 e1 + a e2,
// alpha = [[1, 2a/(b-1)], [0, -1]], beta = [[1, -a], [0, b]].
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

// dim-2 toy with e1*e1 = e2 and e2*e1 = e1, identity twists: not associative.
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

}  // namespace

TEST_CASE("construction enforces shape and commuting twists") {
    auto ctx = rational_context();
    std::vector<Scalar> mu(8, Scalar(ctx));
    LinearMap swap = LinearMap::from_rows(ctx, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    LinearMap diag = LinearMap::from_rows(ctx, std::vector<std::vector<long>>{{1, 0}, {0, 2}});
    CHECK(kind_of([&] { BiHomAlgebra("bad", ctx, 2, mu, swap, diag); }) == "NonCommutingMaps");
    CHECK(kind_of([&] {
              BiHomAlgebra("bad", ctx, 2, std::vector<Scalar>(7, Scalar(ctx)), swap, swap);
          }) == "DimensionMismatch");
    CHECK(kind_of([&] { BiHomAlgebra("ok", ctx, 2, mu, swap, swap); }).empty());
}

TEST_CASE("products against the frozen parametric table") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    CHECK(vec_eq(A->multiply(A->basis(0), A->basis(0)), A->basis(0)));
    CHECK(vec_is_zero(A->multiply(A->zero(), A->basis(1))));
    Vec e2e2 = A->multiply(A->basis(1), A->basis(1));
    CHECK(e2e2[0] == S(ctx, "-a^2*(b-2)/(b-1)^2"));
    CHECK(e2e2[1] == S(ctx, "a"));
}

TEST_CASE("associator values and trilinearity") {
    auto ctx = rational_context();
    AlgebraPtr T = skew_toy(ctx);
    // mu(mu(e1,e1),e1) - mu(e1,mu(e1,e1)) = mu(e2,e1) - mu(e1,e2) = e1.
    CHECK(vec_eq(T->associator(T->basis(0), T->basis(0), T->basis(0)), T->basis(0)));

    // With identity twists the associator is the ordinary one.
    Vec x = {Scalar(ctx, 2L), Scalar(ctx, -1L)};
    Vec y = {Scalar(ctx, 3L), Scalar(ctx, 1L)};
    Vec z = {Scalar(ctx, -2L), Scalar(ctx, 5L)};
    Vec direct = vec_sub(T->multiply(T->multiply(x, y), z), T->multiply(x, T->multiply(y, z)));
    CHECK(vec_eq(T->associator(x, y, z), direct));

    Vec xp = {Scalar(ctx, 1L), Scalar(ctx, 4L)};
    Vec sum = T->associator(vec_add(x, xp), y, z);
    CHECK(vec_eq(sum, vec_add(T->associator(x, y, z), T->associator(xp, y, z))));
    Vec ysum = T->associator(x, vec_add(y, xp), z);
    CHECK(vec_eq(ysum, vec_add(T->associator(x, y, z), T->associator(x, xp, z))));
    Vec zsum = T->associator(x, y, vec_add(z, xp));
    CHECK(vec_eq(zsum, vec_add(T->associator(x, y, z), T->associator(x, y, xp))));
}

TEST_CASE("well-formedness verdicts") {
    auto ctx = make_context({"a", "b"});
    CHECK(validate(*parametric2(ctx)).pass);

    auto q = rational_context();
    CHECK(validate(*skew_toy(q)).pass);

    // alpha swaps e1 and e2 but e1*e1 = e1: alpha(e1*e1) = e2 while
    // alpha(e1)*alpha(e1) = e2*e2 = 0.
    std::vector<Scalar> mu(8, Scalar(q));
    mu[0] = Scalar(q, 1L);
    LinearMap swap = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    AlgebraPtr bad = BiHomAlgebra::make("bad-twist", q, 2, std::move(mu), swap, LinearMap::identity(q, 2));
    CheckReport r = validate(*bad);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses[0].equation == "alpha-multiplicative");
    CHECK(r.witnesses[0].tuple == std::vector<std::size_t>{0, 0});
    CHECK(r.stats.tuples == 8);
}

TEST_CASE("subalgebra and ideal verdicts") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);

    Subspace whole(ctx, 2, {A->basis(0), A->basis(1)});
    CHECK(is_subalgebra(*A, whole).pass);
    CHECK(is_two_sided_ideal(*A, whole).pass);

    Subspace trivial(ctx, 2, {});
    CHECK(is_subalgebra(*A, trivial).pass);
    CHECK(is_two_sided_ideal(*A, trivial).pass);

    Subspace line(ctx, 2, {A->basis(0)});
    CHECK(is_subalgebra(*A, line).pass);
    CheckReport ideal = is_two_sided_ideal(*A, line);
    CHECK_FALSE(ideal.pass);
    REQUIRE_FALSE(ideal.witnesses.empty());
    // e1*e2 = -a e1 + b e2 already escapes the line.
    CHECK(ideal.witnesses[0].equation == "left-absorption");

    CHECK(kind_of([&] { is_subalgebra(*A, Subspace(ctx, 3, {})); }) == "DimensionMismatch");
}

TEST_CASE("morphism verdicts and graphs") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);

    AlgebraMorphism id = make_morphism(A, A, LinearMap::identity(ctx, 2));
    CHECK(check_morphism(id).pass);

    AlgebraMorphism zero = make_morphism(A, A, LinearMap(ctx, 2, 2));
    CHECK(check_morphism(zero).pass);

    LinearMap swap = LinearMap::from_rows(ctx, std::vector<std::vector<Scalar>>{
                                                   {S(ctx, "0"), S(ctx, "1")}, {S(ctx, "1"), S(ctx, "0")}});
    CheckReport bad = check_morphism(make_morphism(A, A, swap));
    CHECK_FALSE(bad.pass);
    CHECK(bad.witnesses[0].equation == "multiplicativity");
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0});

    Subspace graph = graph_subspace(id);
    CHECK(graph.ambient_dim() == 4);
    CHECK(graph.dim() == 2);
    Vec diag = zero_vec(ctx, 4);
    diag[0] = Scalar(ctx, 1L);
    diag[2] = Scalar(ctx, 1L);
    CHECK(graph.contains(diag));

    CHECK(kind_of([&] { make_morphism(A, A, LinearMap(ctx, 3, 2)); }) == "DimensionMismatch");
}

TEST_CASE("associativity check") {
    auto ctx = make_context({"a", "b"});
    CheckReport good = check_bihom_associative(*parametric2(ctx));
    CHECK(good.pass);
    CHECK(good.stats.tuples == 8);

    auto q = rational_context();
    CheckReport bad = check_bihom_associative(*skew_toy(q));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].tuple == std::vector<std::size_t>{0, 0, 0});
    CHECK(bad.witnesses[0].residual == "(1, 0)");
    CHECK(bad.stats.tuples == 8);
}

TEST_CASE("alternativity in all three modes") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    for (const CheckMode& mode :
         {CheckMode::linearized(), CheckMode::symbolic(), CheckMode::sampled(25, 7)}) {
        CHECK(check_left_alternative(*A, mode).pass);
        CHECK(check_right_alternative(*A, mode).pass);
    }

    auto q = rational_context();
    AlgebraPtr T = skew_toy(q);
    CheckReport lin = check_left_alternative(*T);
    CHECK_FALSE(lin.pass);
    CHECK(lin.witnesses[0].equation == "left-alternative-polarized");
    CHECK(lin.witnesses[0].tuple == std::vector<std::size_t>{0, 0, 0});

    CheckReport sym = check_left_alternative(*T, CheckMode::symbolic());
    CHECK_FALSE(sym.pass);
    CHECK(sym.witnesses[0].equation == "left-alternative-quadratic");
    CHECK(sym.witnesses[0].location == "generic elements x, y");

    CheckReport samp = check_left_alternative(*T, CheckMode::sampled(50, 2026));
    CHECK_FALSE(samp.pass);
    CHECK(samp.stats.tuples == 50);
    CheckReport samp2 = check_left_alternative(*T, CheckMode::sampled(50, 2026));
    CHECK(samp.witnesses[0].location == samp2.witnesses[0].location);
    CHECK(samp.witnesses[0].residual == samp2.witnesses[0].residual);
}

TEST_CASE("commutativity and the Jordan identity") {
    auto q = rational_context();
    AlgebraPtr J = sym2(q);
    CHECK(check_bihom_commutative(*J).pass);
    CheckReport jordan = check_bihom_jordan(*J);
    CHECK(jordan.pass);
    CHECK(jordan.stats.tuples == 81);
    CHECK(check_bihom_jordan(*J, CheckMode::symbolic()).pass);
    CHECK(check_bihom_jordan(*J, CheckMode::sampled(25, 11)).pass);

    CheckReport skewed = check_bihom_commutative(*skew_toy(q));
    CHECK_FALSE(skewed.pass);
    CHECK(skewed.witnesses[0].tuple == std::vector<std::size_t>{0, 1});
    CHECK(skewed.witnesses[0].residual == "(-1, 0)");
    CHECK(kind_of([&] { check_bihom_jordan(*skew_toy(q)); }) == "PrereqFailed");
}

TEST_CASE("rota-baxter verdicts") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    CHECK(check_rota_baxter(*A, LinearMap(ctx, 2, 2), Scalar(ctx, 5L)).pass);
    CHECK(check_rota_baxter(*A, LinearMap::identity(ctx, 2), Scalar(ctx, -1L)).pass);

    auto q = rational_context();
    std::vector<Scalar> mu(8, Scalar(q));
    mu[(0 * 2 + 0) * 2 + 1] = Scalar(q, 1L);  // e1*e1 = e2
    AlgebraPtr N = BiHomAlgebra::make("nilpotent-toy", q, 2, std::move(mu), LinearMap::identity(q, 2),
                                      LinearMap::identity(q, 2));
    LinearMap R = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 0}, {0, 1}});
    CheckReport rb = check_rota_baxter(*N, R, Scalar(q));
    CHECK(rb.pass);
    REQUIRE(rb.notes.size() == 2);
    CHECK(rb.notes[0] == "operator commutes with alpha: yes");

    // R = id has weight -1, not 0, on a nonzero product.
    CHECK_FALSE(check_rota_baxter(*N, LinearMap::identity(q, 2), Scalar(q)).pass);
    CHECK(kind_of([&] { check_rota_baxter(*N, LinearMap(q, 3, 3), Scalar(q)); }) == "DimensionMismatch");
}

TEST_CASE("regularity and involutivity") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    CHECK(is_regular(*A));
    CHECK_FALSE(is_involutive(*A));  // beta^2 = diag-ish with b^2, not the identity

    auto q = rational_context();
    CHECK(is_involutive(*skew_toy(q)));
    CHECK(is_regular(*skew_toy(q)));

    std::vector<Scalar> mu(8, Scalar(q));
    LinearMap nil = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {0, 0}});
    AlgebraPtr N = BiHomAlgebra::make("nil-twist", q, 2, std::move(mu), nil, LinearMap::identity(q, 2));
    CHECK_FALSE(is_regular(*N));
}

TEST_CASE("tuple runner is stable across worker counts") {
    auto q = rational_context();
    AlgebraPtr T = skew_toy(q);
    CheckReport serial = check_bihom_associative(*T);

    setenv("BIHOM_WORKERS", "3", 1);
    CheckReport parallel = check_bihom_associative(*T);
    unsetenv("BIHOM_WORKERS");

    CHECK(serial.pass == parallel.pass);
    CHECK(serial.stats.tuples == parallel.stats.tuples);
    REQUIRE(serial.witnesses.size() == parallel.witnesses.size());
    CHECK(serial.witnesses[0].tuple == parallel.witnesses[0].tuple);
    CHECK(serial.witnesses[0].residual == parallel.witnesses[0].residual);
}

TEST_CASE("generic elements extend the context with fresh names") {
    auto ctx = make_context({"a", "x1"});
    GenericElements ge = make_generic(ctx, {{"x", 2}, {"y", 1}});
    REQUIRE(ge.big->size() == 5);
    CHECK(ge.big->name(2) == "gx1");  // x1 collides with a base parameter
    CHECK(ge.big->name(3) == "x2");
    CHECK(ge.big->name(4) == "y1");
    REQUIRE(ge.elements.size() == 2);
    CHECK(ge.elements[0].size() == 2);
    CHECK(ge.elements[1].size() == 1);
    CHECK(ge.elements[0][0] == Scalar::parameter(ge.big, 2));
    CHECK(ge.where == std::vector<std::size_t>{0, 1});
}

TEST_CASE("report rendering") {
    auto q = rational_context();
    // Q^3 with coordinatewise multiplication: associative.
    std::vector<Scalar> mu(27, Scalar(q));
    for (std::size_t i = 0; i < 3; ++i) mu[(i * 3 + i) * 3 + i] = Scalar(q, 1L);
    AlgebraPtr diag3 = BiHomAlgebra::make("diag3", q, 3, std::move(mu), LinearMap::identity(q, 3),
                                          LinearMap::identity(q, 3));
    CheckReport good = check_bihom_associative(*diag3);
    CHECK(render_text(good) == "[PASS] bihom-associative (strategy=exhaustive, tuples=27)");

    CheckReport bad = check_bihom_associative(*skew_toy(q));
    CHECK(render_text(bad) ==
          "[FAIL] bihom-associative (strategy=exhaustive, tuples=8)\n"
          "  fail associativity at (0, 0, 0): residual (1, 0)");

    CHECK(strategy_label(CheckMode::sampled(50, 2026)) == "direct-sampled(points=50, seed=2026)");
    CHECK(kind_of([] { CheckMode::sampled(0, 1); }) == "InvalidArgument");
}
