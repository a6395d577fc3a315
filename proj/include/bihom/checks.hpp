#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

// Deterministic generator used for all seeded sampling.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long small_int() { return static_cast<long>(next() % 7) - 3; }  // {-3, ..., 3}
};

// A context extended by fresh parameters serving as the coordinates of
// generic elements: element s of shape (label, n) owns n parameters named
// label1..labeln (prefixed with 'g' until free of collisions).
struct GenericElements {
    ContextPtr big;
    std::vector<std::size_t> where;  // base parameter i sits at position where[i]
    std::vector<Vec> elements;
};

GenericElements make_generic(const ContextPtr& base,
                             const std::vector<std::pair<std::string, std::size_t>>& shape);

// One multilinear equation family, checked over every index tuple in its box.
struct TupleEquation {
    std::string name;
    std::vector<std::size_t> dims;
    std::function<Vec(const std::vector<std::size_t>&)> residual;  // zero vector <=> holds
};

// Scans every tuple of every family — no early exit, so stats.tuples is always
// the full box volume — and reports the lexicographically least failing tuple
// per family, in declaration order.  The first index is partitioned across
// BIHOM_WORKERS threads when that variable is set above 1.
void run_tuple_equations(CheckReport& report, const std::vector<TupleEquation>& equations);

// A non-multilinear identity system evaluated directly on whole elements.
// `make` receives the evaluation context (the base context for sampling, an
// extension of it for generic elements) together with the embedding positions
// of the base parameters, and returns the equation evaluators; each evaluator
// gets the elements in shape order.
struct DirectEquation {
    std::string name;
    std::function<Vec(const std::vector<Vec>&)> residual;
};

struct DirectSystem {
    std::vector<std::pair<std::string, std::size_t>> shape;
    std::function<std::vector<DirectEquation>(const ContextPtr&, const std::vector<std::size_t>&)> make;
};

void run_direct(CheckReport& report, const ContextPtr& base, const CheckMode& mode,
                const DirectSystem& system);

// Multilinear identity as(e_i, e_j, e_k) = 0 over all basis triples; complete
// by trilinearity.
CheckReport check_bihom_associative(const BiHomAlgebra& A);

// Linearized mode checks as(b(x), a(y), z) + as(b(y), a(x), z) = 0 over basis
// triples; direct modes check the quadratic form as(b(x), a(x), y) = 0 on
// generic or sampled elements.  The verdicts agree in characteristic zero.
CheckReport check_left_alternative(const BiHomAlgebra& A, const CheckMode& mode = CheckMode{});

// Mirror image: as(x, b(y), a(z)) + as(x, b(z), a(y)) = 0, respectively
// as(x, b(y), a(y)) = 0.
CheckReport check_right_alternative(const BiHomAlgebra& A, const CheckMode& mode = CheckMode{});

// mu(b(x), a(y)) = mu(b(y), a(x)) over all basis pairs.
CheckReport check_bihom_commutative(const BiHomAlgebra& A);

// Requires BiHom-commutativity (PrereqFailed otherwise).  Linearized mode
// checks the cyclic form sum_{(x,w,z) cyclic} as(mu(b2(x), ab(w)), a2b(y),
// a3(z)) = 0 over basis quadruples ordered (x, w, z, y); direct modes check
// the cubic form as(mu(b2(x), ab(x)), a2b(y), a3(x)) = 0.
CheckReport check_bihom_jordan(const BiHomAlgebra& A, const CheckMode& mode = CheckMode{});

// mu(R(x), R(y)) = R(mu(R(x), y) + mu(x, R(y)) + lambda*mu(x, y)) over basis
// pairs.  The verdict covers the identity alone; whether R commutes with the
// twist maps is reported in the notes.
CheckReport check_rota_baxter(const BiHomAlgebra& A, const LinearMap& R, const Scalar& lambda);

// Twists invertible and multiplicative.
bool is_regular(const BiHomAlgebra& A);

// Both twists square to the identity.
bool is_involutive(const BiHomAlgebra& A);

}  // namespace bihom
