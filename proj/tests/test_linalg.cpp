#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bihom/error.hpp"
#include "bihom/linalg.hpp"

using namespace bihom;

namespace {

ContextPtr ab() { return make_context({"a", "b"}); }

Scalar S(const ContextPtr& ctx, const std::string& text) { return parse_scalar(ctx, text); }

LinearMap parse_map(const ContextPtr& ctx, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Scalar>> conv;
    for (const auto& row : rows) {
        std::vector<Scalar> out;
        for (const auto& cell : row) out.push_back(S(ctx, cell));
        conv.push_back(std::move(out));
    }
    return LinearMap::from_rows(ctx, conv);
}

std::string kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

// Tiny deterministic generator for the randomized property checks.
struct MiniRng {
    std::uint64_t state;
    explicit MiniRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long small_int() { return static_cast<long>(next() % 7) - 3; }
};

}  // namespace

TEST_CASE("composition basics") {
    auto ctx = ab();
    LinearMap id2 = LinearMap::identity(ctx, 2);
    CHECK(mat_compose(id2, id2) == id2);

    // e1 -> e1, e2 -> (2a/(b-1)) e1 - e2 is an involution.
    LinearMap alpha = parse_map(ctx, {{"1", "2*a/(b-1)"}, {"0", "-1"}});
    CHECK(mat_compose(alpha, alpha) == id2);
    CHECK(mat_pow(alpha, 2).is_identity());
    CHECK(mat_pow(alpha, 0).is_identity());
    CHECK(mat_pow(alpha, 3) == alpha);

    LinearMap wide(ctx, 2, 3);
    CHECK(kind_of([&] { mat_compose(wide, id2); }) == "DimensionMismatch");
}

TEST_CASE("inverse of a triangular symbolic map") {
    auto ctx = ab();
    CHECK(mat_inverse(LinearMap::identity(ctx, 3)).is_identity());

    // e1 -> e1, e2 -> -a e1 + b e2 inverts to e1 -> e1, e2 -> (a/b) e1 + (1/b) e2.
    LinearMap beta = parse_map(ctx, {{"1", "-a"}, {"0", "b"}});
    LinearMap expected = parse_map(ctx, {{"1", "a/b"}, {"0", "1/b"}});
    CHECK(mat_inverse(beta) == expected);
    CHECK(mat_compose(beta, expected).is_identity());

    CHECK(kind_of([&] { mat_inverse(LinearMap(ctx, 2, 2)); }) == "Singular");
    CHECK(kind_of([&] { mat_inverse(LinearMap(ctx, 2, 3)); }) == "DimensionMismatch");
}

TEST_CASE("row echelon form and kernels") {
    auto ctx = rational_context();

    RrefResult zero = rref_and_kernel(LinearMap(ctx, 3, 3));
    CHECK(zero.rank() == 0);
    REQUIRE(zero.kernel_basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(vec_eq(zero.kernel_basis[i], unit_vec(ctx, 3, i)));

    RrefResult id = rref_and_kernel(LinearMap::identity(ctx, 4));
    CHECK(id.rank() == 4);
    CHECK(id.kernel_basis.empty());

    RrefResult ones = rref_and_kernel(LinearMap::from_rows(ctx, std::vector<std::vector<long>>{{1, 1}, {1, 1}}));
    CHECK(ones.rank() == 1);
    REQUIRE(ones.kernel_basis.size() == 1);
    Vec expected = {Scalar(ctx, 1L), Scalar(ctx, -1L)};
    CHECK(vec_eq(ones.kernel_basis[0], expected));
    CHECK(ones.rref.at(0, 0) == Scalar(ctx, 1L));
    CHECK(ones.rref.at(0, 1) == Scalar(ctx, 1L));
    CHECK(ones.rref.at(1, 0).is_zero());
    CHECK(ones.rref.at(1, 1).is_zero());
}

TEST_CASE("complement bases pick the smallest standard vectors") {
    auto ctx = rational_context();

    Subspace line(ctx, 2, {unit_vec(ctx, 2, 0)});
    auto comp = complement_basis(line);
    REQUIRE(comp.size() == 1);
    CHECK(vec_eq(comp[0], unit_vec(ctx, 2, 1)));

    Subspace whole(ctx, 2, {unit_vec(ctx, 2, 0), unit_vec(ctx, 2, 1)});
    CHECK(complement_basis(whole).empty());

    Vec diag = {Scalar(ctx, 1L), Scalar(ctx, 1L), Scalar(ctx, 0L)};
    Subspace slanted(ctx, 3, {diag});
    auto comp3 = complement_basis(slanted);
    REQUIRE(comp3.size() == 2);
    CHECK(vec_eq(comp3[0], unit_vec(ctx, 3, 1)));
    CHECK(vec_eq(comp3[1], unit_vec(ctx, 3, 2)));
}

TEST_CASE("inverse round trip over an invertible corpus") {
    auto ctx = ab();
    std::vector<LinearMap> corpus = {
        LinearMap::identity(ctx, 2),
        parse_map(ctx, {{"1", "2*a/(b-1)"}, {"0", "-1"}}),
        parse_map(ctx, {{"1", "-a"}, {"0", "b"}}),
        parse_map(ctx, {{"1", "a"}, {"b", "a*b+1"}}),  // determinant 1
        parse_map(ctx, {{"2", "0", "1"}, {"0", "b", "0"}, {"1", "0", "1"}}),
    };
    for (const LinearMap& f : corpus) {
        CAPTURE(f.str());
        CHECK(mat_is_invertible(f));
        LinearMap inv = mat_inverse(f);
        CHECK(mat_compose(f, inv).is_identity());
        CHECK(mat_compose(inv, f).is_identity());
    }
}

TEST_CASE("rank plus kernel size equals column count") {
    auto ctx = rational_context();
    MiniRng rng(2026);
    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
        {2, 2}, {3, 3}, {2, 4}, {4, 2}, {3, 5}, {5, 3}, {1, 6}};
    for (auto [r, c] : shapes) {
        for (int rep = 0; rep < 8; ++rep) {
            LinearMap m(ctx, r, c);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(ctx, rng.small_int()));
            }
            RrefResult res = rref_and_kernel(m);
            CHECK(res.rank() + res.kernel_basis.size() == c);
            for (const Vec& k : res.kernel_basis) CHECK(vec_is_zero(m.apply(k)));
        }
    }
}

TEST_CASE("complement plus subspace basis spans everything") {
    auto ctx = ab();
    std::vector<Subspace> subs;
    subs.emplace_back(ctx, 3, std::vector<Vec>{Vec{S(ctx, "1"), S(ctx, "1"), S(ctx, "0")}});
    subs.emplace_back(ctx, 3, std::vector<Vec>{Vec{S(ctx, "a"), S(ctx, "1"), S(ctx, "0")},
                                               Vec{S(ctx, "0"), S(ctx, "0"), S(ctx, "b")}});
    subs.emplace_back(ctx, 2, std::vector<Vec>{});
    for (const Subspace& sub : subs) {
        auto comp = complement_basis(sub);
        CHECK(comp.size() + sub.dim() == sub.ambient_dim());
        std::vector<std::vector<Scalar>> rows;
        for (const Vec& v : sub.basis()) rows.push_back(v);
        for (const Vec& v : comp) rows.push_back(v);
        CHECK(mat_rank(LinearMap::from_rows(ctx, rows)) == sub.ambient_dim());
    }
}

TEST_CASE("exact linear solving") {
    auto ctx = rational_context();
    LinearMap m = LinearMap::from_rows(ctx, std::vector<std::vector<long>>{{1, 2}, {3, 4}});
    Vec b = {Scalar(ctx, 5L), Scalar(ctx, 6L)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(vec_eq(m.apply(*x), b));

    LinearMap ones = LinearMap::from_rows(ctx, std::vector<std::vector<long>>{{1, 1}, {1, 1}});
    Vec incompatible = {Scalar(ctx, 1L), Scalar(ctx, 2L)};
    CHECK_FALSE(solve(ones, incompatible).has_value());

    // Under-determined: free coordinates are pinned to zero.
    LinearMap row(ctx, 1, 3);
    row.set(0, 1, Scalar(ctx, 2L));
    auto y = solve(row, Vec{Scalar(ctx, 4L)});
    REQUIRE(y.has_value());
    CHECK((*y)[0].is_zero());
    CHECK((*y)[1] == Scalar(ctx, 2L));
    CHECK((*y)[2].is_zero());
}

TEST_CASE("subspace membership and validation") {
    auto ctx = ab();
    Vec v1 = {S(ctx, "1"), S(ctx, "1"), S(ctx, "0")};
    Subspace sub(ctx, 3, {v1});
    CHECK(sub.contains(vec_scale(S(ctx, "a+b"), v1)));
    CHECK_FALSE(sub.contains(unit_vec(ctx, 3, 0)));
    CHECK(sub.contains(zero_vec(ctx, 3)));

    Vec v2 = vec_scale(S(ctx, "2"), v1);
    CHECK(kind_of([&] { Subspace(ctx, 3, {v1, v2}); }) == "InvalidArgument");
    CHECK(kind_of([&] { Subspace(ctx, 2, {v1}); }) == "DimensionMismatch");
}

TEST_CASE("block sums and tensor products of maps") {
    auto ctx = ab();
    LinearMap f = parse_map(ctx, {{"1", "a"}, {"0", "1"}});
    LinearMap g = parse_map(ctx, {{"b"}});

    LinearMap blk = block_diag(f, g);
    CHECK(blk.rows() == 3);
    CHECK(blk.cols() == 3);
    CHECK(blk.at(0, 1) == S(ctx, "a"));
    CHECK(blk.at(2, 2) == S(ctx, "b"));
    CHECK(blk.at(0, 2).is_zero());
    CHECK(blk.at(2, 0).is_zero());

    CHECK(mat_kron(LinearMap::identity(ctx, 2), LinearMap::identity(ctx, 2)).is_identity());
    LinearMap k = mat_kron(f, g);
    CHECK(k.rows() == 2);
    CHECK(k.at(0, 1) == S(ctx, "a*b"));

    // kron(f, g) applied to x (x) y flattened as i*dim(y) + j matches componentwise action.
    LinearMap h = parse_map(ctx, {{"1", "1"}, {"0", "b"}});
    LinearMap kk = mat_kron(f, h);
    Vec x = {S(ctx, "a"), S(ctx, "1")};
    Vec y = {S(ctx, "1"), S(ctx, "b-1")};
    Vec flat(4, Scalar(ctx));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) flat[i * 2 + j] = x[i] * y[j];
    }
    Vec fx = f.apply(x);
    Vec hy = h.apply(y);
    Vec expect(4, Scalar(ctx));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) expect[i * 2 + j] = fx[i] * hy[j];
    }
    CHECK(vec_eq(kk.apply(flat), expect));
}

TEST_CASE("application, commutation, and embedding") {
    auto ctx = ab();
    LinearMap beta = parse_map(ctx, {{"1", "-a"}, {"0", "b"}});
    Vec image = beta.apply(unit_vec(ctx, 2, 1));
    CHECK(image[0] == S(ctx, "-a"));
    CHECK(image[1] == S(ctx, "b"));
    CHECK(kind_of([&] { beta.apply(zero_vec(ctx, 3)); }) == "DimensionMismatch");

    LinearMap alpha = parse_map(ctx, {{"1", "2*a/(b-1)"}, {"0", "-1"}});
    CHECK(mat_commute(alpha, alpha));
    CHECK(mat_commute(alpha, LinearMap::identity(ctx, 2)));
    LinearMap swap = parse_map(ctx, {{"0", "1"}, {"1", "0"}});
    CHECK_FALSE(mat_commute(alpha, swap));

    auto big = extend_context(ctx, {"x1"});
    LinearMap lifted = beta.embed(big, {0, 1});
    CHECK(lifted.at(0, 1) == parse_scalar(big, "-a"));
    CHECK(same_context(lifted.context(), big));

    CHECK(vec_str(image) == "(-a, b)");
    CHECK(beta.str() == "[[1, -a], [0, b]]");
}
