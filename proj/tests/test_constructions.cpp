#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

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

// Q[x]/(x^2): e1 = 1, e2 = x. span{e2} is a two-sided ideal.
AlgebraPtr dual_numbers(const ContextPtr& ctx) {
    std::vector<Scalar> mu(8, Scalar(ctx));
    mu[(0 * 2 + 0) * 2 + 0] = Scalar(ctx, 1L);
    mu[(0 * 2 + 1) * 2 + 1] = Scalar(ctx, 1L);
    mu[(1 * 2 + 0) * 2 + 1] = Scalar(ctx, 1L);
    return BiHomAlgebra::make("dual-numbers", ctx, 2, std::move(mu), LinearMap::identity(ctx, 2),
                              LinearMap::identity(ctx, 2));
}

AlgebraPtr unital_line(const ContextPtr& ctx) {
    std::vector<Scalar> mu(1, Scalar(ctx, 1L));
    return BiHomAlgebra::make("line", ctx, 1, std::move(mu), LinearMap::identity(ctx, 1),
                              LinearMap::identity(ctx, 1));
}

}  // namespace

TEST_CASE("quotient by an ideal, with projection morphism") {
    auto q = rational_context();
    AlgebraPtr A = dual_numbers(q);

    QuotientResult res = quotient_with_projection(A, Subspace(q, 2, {A->basis(1)}));
    REQUIRE(res.algebra->dim() == 1);
    CHECK(res.algebra->mu(0, 0, 0) == Scalar(q, 1L));
    CHECK(check_morphism(res.projection).pass);
    CHECK(res.algebra->label() == "quotient(dual-numbers)");

    // Quotient by the zero ideal is a copy of A.
    QuotientResult whole = quotient_with_projection(A, Subspace(q, 2, {}));
    CHECK(whole.algebra->dim() == 2);
    CHECK(whole.algebra->mu_tensor() == A->mu_tensor());
    CHECK(whole.algebra->alpha() == A->alpha());

    // Quotient by the whole algebra is the zero algebra.
    CHECK(quotient(A, Subspace(q, 2, {A->basis(0), A->basis(1)}))->dim() == 0);

    CHECK(kind_of([&] { quotient(A, Subspace(q, 2, {A->basis(0)})); }) == "NotAnIdeal");
}

TEST_CASE("direct sum: block structure and preserved alternativity") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    AlgebraPtr D = direct_sum(A, A);
    REQUIRE(D->dim() == 4);
    CHECK(D->label() == "sum(parametric2, parametric2)");

    // Cross-block products vanish; in-block products reproduce the factors.
    CHECK(vec_is_zero(D->multiply(D->basis(0), D->basis(2))));
    CHECK(vec_is_zero(D->multiply(D->basis(3), D->basis(1))));
    Vec inb = D->multiply(D->basis(3), D->basis(3));
    CHECK(inb[2] == S(ctx, "-a^2*(b-2)/(b-1)^2"));
    CHECK(inb[3] == S(ctx, "a"));
    CHECK(vec_is_zero(D->associator(D->basis(0), D->basis(2), D->basis(1))));

    CHECK(validate(*D).pass);
    CHECK(check_left_alternative(*D).pass);
    CHECK(check_right_alternative(*D).pass);

    // Quotient by the second block recovers the first factor's tensors.
    QuotientResult back = quotient_with_projection(D, Subspace(ctx, 4, {D->basis(2), D->basis(3)}));
    REQUIRE(back.algebra->dim() == 2);
    CHECK(back.algebra->mu_tensor() == A->mu_tensor());
    CHECK(back.algebra->alpha() == A->alpha());
    CHECK(back.algebra->beta() == A->beta());

    // Graph of the identity morphism A -> A is a subalgebra of the sum.
    Subspace graph = graph_subspace(make_morphism(A, A, LinearMap::identity(ctx, 2)));
    CHECK(is_subalgebra(*D, graph).pass);

    // Content-identical contexts are interchangeable; a different one is not.
    CHECK(direct_sum(A, parametric2(make_context({"a", "b"})))->dim() == 4);
    CHECK(kind_of([&] { direct_sum(A, skew_toy(rational_context())); }) == "ContextMismatch");
}

TEST_CASE("tensor product of an associative and an alternative algebra") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    AlgebraPtr U = unital_line(ctx);

    AlgebraPtr UA = tensor_product(U, A);
    REQUIRE(UA->dim() == 2);
    CHECK(UA->mu_tensor() == A->mu_tensor());
    CHECK(UA->alpha() == A->alpha());

    AlgebraPtr T = tensor_product(A, A);
    REQUIRE(T->dim() == 4);
    CHECK(validate(*T).pass);
    CHECK(check_left_alternative(*T).pass);
    CHECK(check_right_alternative(*T).pass);

    auto q = rational_context();
    CHECK(kind_of([&] { tensor_product(skew_toy(q), unital_line(q)); }) == "PrereqFailed");
    CHECK(kind_of([&] { tensor_product(unital_line(q), skew_toy(q)); }) == "PrereqFailed");
}

TEST_CASE("twisting by commuting self-morphisms") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);

    AlgebraPtr same = yau_twist(A, LinearMap::identity(ctx, 2), LinearMap::identity(ctx, 2));
    CHECK(same->mu_tensor() == A->mu_tensor());
    CHECK(same->alpha() == A->alpha());
    CHECK(same->beta() == A->beta());

    AlgebraPtr P = power_twist(A, 2);
    CHECK(validate(*P).pass);
    CHECK(check_left_alternative(*P).pass);
    CHECK(check_right_alternative(*P).pass);
    CHECK(P->alpha() == mat_compose(A->alpha(), mat_pow(A->alpha(), 2)));

    LinearMap swap = LinearMap::from_rows(ctx, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    CHECK(kind_of([&] { yau_twist(A, swap, swap); }) == "NonCommutingMaps");

    auto q = rational_context();
    LinearMap qswap = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {1, 0}});
    CHECK(kind_of([&] { yau_twist(skew_toy(q), qswap, qswap); }) == "NotAMorphism");
}

TEST_CASE("deformation along a rota-baxter operator") {
    auto q = rational_context();
    std::vector<Scalar> mu(8, Scalar(q));
    mu[(0 * 2 + 0) * 2 + 1] = Scalar(q, 1L);
    AlgebraPtr N = BiHomAlgebra::make("nilpotent-toy", q, 2, std::move(mu), LinearMap::identity(q, 2),
                                      LinearMap::identity(q, 2));
    LinearMap R = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 0}, {0, 1}});

    AlgebraPtr D = rota_baxter_deformation(N, R);
    CHECK(D->dim() == 2);
    for (std::size_t i = 0; i < 8; ++i) CHECK(D->mu_tensor()[i].is_zero());
    CHECK(validate(*D).pass);
    CHECK(check_bihom_associative(*D).pass);

    CHECK(kind_of([&] { rota_baxter_deformation(N, LinearMap::identity(q, 2)); }) == "NotRotaBaxter");

    // Zero multiplication makes every operator Rota-Baxter, so a twist
    // commutation failure is reachable.
    std::vector<Scalar> zero_mu(8, Scalar(q));
    LinearMap shear = LinearMap::from_rows(q, std::vector<std::vector<long>>{{1, 1}, {0, 1}});
    AlgebraPtr Z = BiHomAlgebra::make("zero-mu", q, 2, std::move(zero_mu), shear,
                                      LinearMap::identity(q, 2));
    LinearMap diag = LinearMap::from_rows(q, std::vector<std::vector<long>>{{1, 0}, {0, 2}});
    CHECK(kind_of([&] { rota_baxter_deformation(Z, diag); }) == "NonCommutingMaps");
}

TEST_CASE("plus algebra: symmetrized product and the Jordan identity") {
    auto ctx = make_context({"a", "b"});
    AlgebraPtr A = parametric2(ctx);
    AlgebraPtr P = plus_algebra(A);
    REQUIRE(P->dim() == 2);

    // For this table the symmetrized product is exactly twice the original.
    const Scalar two(ctx, 2L);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(P->mu(i, j, k) == two * A->mu(i, j, k));

    CHECK(P->alpha() == A->alpha());
    CHECK(P->beta() == A->beta());
    CHECK(validate(*P).pass);
    CHECK(check_bihom_commutative(*P).pass);
    CHECK(check_bihom_jordan(*P).pass);
    CHECK(check_bihom_jordan(*P, CheckMode::symbolic()).pass);

    auto q = rational_context();
    CHECK(kind_of([&] { plus_algebra(skew_toy(q)); }) == "PrereqFailed");

    std::vector<Scalar> zmu(8, Scalar(q));
    LinearMap nil = LinearMap::from_rows(q, std::vector<std::vector<long>>{{0, 1}, {0, 0}});
    AlgebraPtr NR = BiHomAlgebra::make("nil-twist", q, 2, std::move(zmu), nil, LinearMap::identity(q, 2));
    CHECK(kind_of([&] { plus_algebra(NR); }) == "NotRegular");
}
