#include "bihom/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <thread>

#include "bihom/error.hpp"

namespace bihom {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

unsigned worker_count() {
    if (const char* env = std::getenv("BIHOM_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 1) return static_cast<unsigned>(v);
    }
    return 1;
}

std::vector<Vec> columns_of(const LinearMap& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return cols;
}

std::vector<std::size_t> identity_positions(std::size_t n) {
    std::vector<std::size_t> where(n);
    std::iota(where.begin(), where.end(), 0);
    return where;
}

}  // namespace

GenericElements make_generic(const ContextPtr& base,
                             const std::vector<std::pair<std::string, std::size_t>>& shape) {
    std::vector<std::string> fresh;
    auto taken = [&](const std::string& name) {
        return base->index_of(name).has_value() ||
               std::find(fresh.begin(), fresh.end(), name) != fresh.end();
    };
    std::vector<std::size_t> sizes;
    for (const auto& [label, n] : shape) {
        sizes.push_back(n);
        for (std::size_t i = 1; i <= n; ++i) {
            std::string name = label + std::to_string(i);
            while (taken(name)) name = "g" + name;
            fresh.push_back(std::move(name));
        }
    }
    GenericElements ge;
    ge.big = extend_context(base, fresh);
    ge.where = identity_positions(base->size());
    std::size_t offset = base->size();
    for (std::size_t n : sizes) {
        Vec v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(Scalar::parameter(ge.big, offset++));
        ge.elements.push_back(std::move(v));
    }
    return ge;
}

void run_tuple_equations(CheckReport& report, const std::vector<TupleEquation>& equations) {
    const auto start = Clock::now();
    for (const TupleEquation& eq : equations) {
        std::uint64_t total = 1;
        for (std::size_t d : eq.dims) total *= d;
        report.stats.tuples += total;
        if (total == 0) continue;

        // Scans tuples with first index in [from, to); records the least
        // failing tuple of the slice.
        auto scan = [&eq](std::size_t from, std::size_t to) -> std::optional<Witness> {
            std::optional<Witness> found;
            std::vector<std::size_t> tuple(eq.dims.size(), 0);
            if (!tuple.empty()) tuple[0] = from;
            while (true) {
                Vec res = eq.residual(tuple);
                if (!found && !vec_is_zero(res)) {
                    found = Witness{eq.name, tuple, "", vec_str(res)};
                }
                // Odometer increment, last index fastest.
                std::size_t pos = tuple.size();
                while (pos > 0) {
                    --pos;
                    const std::size_t limit = pos == 0 ? to : eq.dims[pos];
                    if (++tuple[pos] < limit) break;
                    if (pos == 0) return found;
                    tuple[pos] = 0;
                }
                if (tuple.empty()) return found;
            }
        };

        const std::size_t first_dim = eq.dims.empty() ? 1 : eq.dims[0];
        const unsigned workers = std::min<std::size_t>(worker_count(), first_dim);
        if (workers <= 1 || eq.dims.empty()) {
            if (auto w = scan(0, first_dim)) report.add_witness(std::move(*w));
            continue;
        }
        std::vector<std::optional<Witness>> slots(workers);
        std::vector<std::thread> threads;
        const std::size_t chunk = (first_dim + workers - 1) / workers;
        for (unsigned t = 0; t < workers; ++t) {
            const std::size_t from = t * chunk;
            const std::size_t to = std::min(first_dim, from + chunk);
            if (from >= to) break;
            threads.emplace_back([&, t, from, to] { slots[t] = scan(from, to); });
        }
        for (std::thread& th : threads) th.join();
        for (auto& slot : slots) {
            if (slot) {
                report.add_witness(std::move(*slot));
                break;  // earliest chunk holds the lexicographically least tuple
            }
        }
    }
    report.stats.elapsed_ms += ms_since(start);
}

void run_direct(CheckReport& report, const ContextPtr& base, const CheckMode& mode,
                const DirectSystem& system) {
    const auto start = Clock::now();
    if (mode.strategy == Strategy::Symbolic) {
        GenericElements ge = make_generic(base, system.shape);
        std::vector<DirectEquation> eqs = system.make(ge.big, ge.where);
        std::string loc = "generic elements";
        for (std::size_t s = 0; s < system.shape.size(); ++s) {
            loc += (s ? ", " : " ") + system.shape[s].first;
        }
        for (const DirectEquation& eq : eqs) {
            Vec res = eq.residual(ge.elements);
            if (!vec_is_zero(res)) report.add_witness(Witness{eq.name, {}, loc, vec_str(res)});
            report.stats.tuples += 1;
        }
    } else if (mode.strategy == Strategy::Sampled) {
        if (mode.points < 1) throw Error("InvalidArgument", "sampled mode requires at least one point");
        std::vector<DirectEquation> eqs = system.make(base, identity_positions(base->size()));
        SplitMix64 rng(mode.seed);
        std::vector<std::optional<Witness>> found(eqs.size());
        for (std::size_t p = 0; p < mode.points; ++p) {
            std::vector<Vec> elements;
            std::string desc;
            for (const auto& [label, n] : system.shape) {
                Vec v;
                v.reserve(n);
                for (std::size_t i = 0; i < n; ++i) v.emplace_back(base, rng.small_int());
                if (!desc.empty()) desc += ", ";
                desc += label + "=" + vec_str(v);
                elements.push_back(std::move(v));
            }
            for (std::size_t e = 0; e < eqs.size(); ++e) {
                Vec res = eqs[e].residual(elements);
                if (res.empty() || vec_is_zero(res) || found[e]) continue;
                found[e] = Witness{eqs[e].name, {},
                                   "sample " + std::to_string(p) + " (seed=" + std::to_string(mode.seed) +
                                       "): " + desc,
                                   vec_str(res)};
            }
        }
        for (auto& w : found) {
            if (w) report.add_witness(std::move(*w));
        }
        report.stats.tuples += mode.points;
    } else {
        throw Error("InvalidArgument", "direct runner needs a symbolic or sampled mode");
    }
    report.stats.elapsed_ms += ms_since(start);
}

CheckReport check_bihom_associative(const BiHomAlgebra& A) {
    CheckReport r;
    r.check_name = "bihom-associative";
    r.stats.strategy = "exhaustive";
    const std::size_t n = A.dim();
    std::vector<TupleEquation> eqs;
    eqs.push_back({"associativity",
                   {n, n, n},
                   [&A](const std::vector<std::size_t>& t) {
                       return A.associator(A.basis(t[0]), A.basis(t[1]), A.basis(t[2]));
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

namespace {

CheckReport check_alternative(const BiHomAlgebra& A, const CheckMode& mode, bool left) {
    CheckReport r;
    r.check_name = left ? "left-alternative" : "right-alternative";
    r.stats.strategy = strategy_label(mode);
    const std::size_t n = A.dim();
    if (mode.strategy == Strategy::Linearized) {
        const std::vector<Vec> a = columns_of(A.alpha());
        const std::vector<Vec> b = columns_of(A.beta());
        std::vector<TupleEquation> eqs;
        if (left) {
            eqs.push_back({"left-alternative-polarized",
                           {n, n, n},
                           [&](const std::vector<std::size_t>& t) {
                               Vec first = A.associator(b[t[0]], a[t[1]], A.basis(t[2]));
                               Vec second = A.associator(b[t[1]], a[t[0]], A.basis(t[2]));
                               return vec_add(first, second);
                           }});
        } else {
            eqs.push_back({"right-alternative-polarized",
                           {n, n, n},
                           [&](const std::vector<std::size_t>& t) {
                               Vec first = A.associator(A.basis(t[0]), b[t[1]], a[t[2]]);
                               Vec second = A.associator(A.basis(t[0]), b[t[2]], a[t[1]]);
                               return vec_add(first, second);
                           }});
        }
        run_tuple_equations(r, eqs);
        return r;
    }
    DirectSystem sys;
    sys.shape = {{"x", n}, {"y", n}};
    sys.make = [&A, left](const ContextPtr& ctx, const std::vector<std::size_t>& where) {
        auto big = std::make_shared<BiHomAlgebra>(A.embed(ctx, where));
        std::vector<DirectEquation> eqs;
        if (left) {
            eqs.push_back({"left-alternative-quadratic", [big](const std::vector<Vec>& el) {
                               return big->associator(big->beta().apply(el[0]),
                                                      big->alpha().apply(el[0]), el[1]);
                           }});
        } else {
            eqs.push_back({"right-alternative-quadratic", [big](const std::vector<Vec>& el) {
                               return big->associator(el[0], big->beta().apply(el[1]),
                                                      big->alpha().apply(el[1]));
                           }});
        }
        return eqs;
    };
    run_direct(r, A.context(), mode, sys);
    return r;
}

}  // namespace

CheckReport check_left_alternative(const BiHomAlgebra& A, const CheckMode& mode) {
    return check_alternative(A, mode, true);
}

CheckReport check_right_alternative(const BiHomAlgebra& A, const CheckMode& mode) {
    return check_alternative(A, mode, false);
}

CheckReport check_bihom_commutative(const BiHomAlgebra& A) {
    CheckReport r;
    r.check_name = "bihom-commutative";
    r.stats.strategy = "exhaustive";
    const std::size_t n = A.dim();
    const std::vector<Vec> a = columns_of(A.alpha());
    const std::vector<Vec> b = columns_of(A.beta());
    std::vector<TupleEquation> eqs;
    eqs.push_back({"commutativity",
                   {n, n},
                   [&](const std::vector<std::size_t>& t) {
                       return vec_sub(A.multiply(b[t[0]], a[t[1]]), A.multiply(b[t[1]], a[t[0]]));
                   }});
    run_tuple_equations(r, eqs);
    return r;
}

CheckReport check_bihom_jordan(const BiHomAlgebra& A, const CheckMode& mode) {
    CheckReport commutative = check_bihom_commutative(A);
    if (!commutative.pass)
        throw Error("PrereqFailed", "the product is not BiHom-commutative on '" + A.label() +
                                        "', so the Jordan identity does not apply");
    CheckReport r;
    r.check_name = "bihom-jordan";
    r.stats.strategy = strategy_label(mode);
    const std::size_t n = A.dim();
    if (mode.strategy == Strategy::Linearized) {
        const LinearMap b2 = mat_pow(A.beta(), 2);
        const LinearMap ab = mat_compose(A.alpha(), A.beta());
        const LinearMap a2b = mat_compose(A.alpha(), ab);
        const LinearMap a3 = mat_pow(A.alpha(), 3);
        const std::vector<Vec> cb2 = columns_of(b2);
        const std::vector<Vec> cab = columns_of(ab);
        const std::vector<Vec> ca2b = columns_of(a2b);
        const std::vector<Vec> ca3 = columns_of(a3);
        // Quadruples are ordered (x, w, z, y); the cyclic sum rotates (x, w, z).
        auto term = [&](std::size_t x, std::size_t w, std::size_t z, std::size_t y) {
            return A.associator(A.multiply(cb2[x], cab[w]), ca2b[y], ca3[z]);
        };
        std::vector<TupleEquation> eqs;
        eqs.push_back({"jordan-cyclic",
                       {n, n, n, n},
                       [&, term](const std::vector<std::size_t>& t) {
                           Vec sum = term(t[0], t[1], t[2], t[3]);
                           sum = vec_add(sum, term(t[1], t[2], t[0], t[3]));
                           return vec_add(sum, term(t[2], t[0], t[1], t[3]));
                       }});
        run_tuple_equations(r, eqs);
        return r;
    }
    DirectSystem sys;
    sys.shape = {{"x", n}, {"y", n}};
    sys.make = [&A](const ContextPtr& ctx, const std::vector<std::size_t>& where) {
        auto big = std::make_shared<BiHomAlgebra>(A.embed(ctx, where));
        auto b2 = std::make_shared<LinearMap>(mat_pow(big->beta(), 2));
        auto ab = std::make_shared<LinearMap>(mat_compose(big->alpha(), big->beta()));
        auto a2b = std::make_shared<LinearMap>(mat_compose(big->alpha(), *ab));
        auto a3 = std::make_shared<LinearMap>(mat_pow(big->alpha(), 3));
        std::vector<DirectEquation> eqs;
        eqs.push_back({"jordan-cubic", [big, b2, ab, a2b, a3](const std::vector<Vec>& el) {
                           Vec square = big->multiply(b2->apply(el[0]), ab->apply(el[0]));
                           return big->associator(square, a2b->apply(el[1]), a3->apply(el[0]));
                       }});
        return eqs;
    };
    run_direct(r, A.context(), mode, sys);
    return r;
}

CheckReport check_rota_baxter(const BiHomAlgebra& A, const LinearMap& R, const Scalar& lambda) {
    require_same_context(A.context(), R.context());
    require_same_context(A.context(), lambda.context());
    if (R.rows() != A.dim() || R.cols() != A.dim())
        throw Error("DimensionMismatch", "operator is " + std::to_string(R.rows()) + "x" +
                                             std::to_string(R.cols()) + " on an algebra of dimension " +
                                             std::to_string(A.dim()));
    CheckReport r;
    r.check_name = "rota-baxter";
    r.stats.strategy = "exhaustive";
    const std::size_t n = A.dim();
    const std::vector<Vec> Rc = columns_of(R);
    std::vector<TupleEquation> eqs;
    eqs.push_back({"rota-baxter",
                   {n, n},
                   [&](const std::vector<std::size_t>& t) {
                       Vec lhs = A.multiply(Rc[t[0]], Rc[t[1]]);
                       Vec inner = vec_add(A.multiply(Rc[t[0]], A.basis(t[1])),
                                           A.multiply(A.basis(t[0]), Rc[t[1]]));
                       inner = vec_add(inner, vec_scale(lambda, A.basis_product(t[0], t[1])));
                       return vec_sub(lhs, R.apply(inner));
                   }});
    run_tuple_equations(r, eqs);
    r.note(std::string("operator commutes with alpha: ") +
           (mat_commute(R, A.alpha()) ? "yes" : "no"));
    r.note(std::string("operator commutes with beta: ") + (mat_commute(R, A.beta()) ? "yes" : "no"));
    return r;
}

bool is_regular(const BiHomAlgebra& A) {
    return mat_is_invertible(A.alpha()) && mat_is_invertible(A.beta()) && validate(A).pass;
}

bool is_involutive(const BiHomAlgebra& A) {
    return mat_pow(A.alpha(), 2).is_identity() && mat_pow(A.beta(), 2).is_identity();
}

}  // namespace bihom
