// Acceptance gate: exercises every advertised capability end to end and
// prints exactly one PASS/FAIL line per criterion.  argv[1] must be the path
// to the command-line binary (used by the last criterion).  Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bihom/bimodule.hpp"
#include "bihom/bimodule_constructions.hpp"
#include "bihom/catalog.hpp"
#include "bihom/checks.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"
#include "bihom/linalg.hpp"
#include "bihom/scalar.hpp"
#include "bihom/suites.hpp"

using namespace bihom;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, bool ok, const std::string& what, double secs, double budget) {
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " [" << secs << "s";
    if (budget > 0) line << " of " << budget << "s budget";
    line << "]";
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
}

// Runs one criterion body, folding exceptions and budget overruns into the
// verdict.  body() returns true when every property holds.
template <class F>
void criterion(int n, const std::string& what, double budget, F body) {
    Clock::time_point t0 = Clock::now();
    bool ok = false;
    std::string suffix;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        suffix = std::string(" (error: ") + e.what() + ")";
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0 && secs > budget) ok = false;
    report(n, ok, what + suffix, secs, budget);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli-binary>" << std::endl;
        return 2;
    }
    const std::string cli = argv[1];
    const ContextPtr ctx = make_context({"a", "b"});
    const ContextPtr& q = rational_context();

    criterion(1, "first parametric family: validate, associativity, both alternativity", 5.0, [&] {
        AlgebraPtr A = example_e1_first(ctx);
        return validate(*A).pass && check_bihom_associative(*A).pass &&
               check_left_alternative(*A).pass && check_right_alternative(*A).pass;
    });

    criterion(2, "direct sum of the two parametric families is alternative", 10.0, [&] {
        auto [first, second] = example_e1_pair(ctx);
        AlgebraPtr S = direct_sum(first, second);
        return S->dim() == 4 && check_left_alternative(*S).pass &&
               check_right_alternative(*S).pass;
    });

    criterion(3, "octonions: alternative over all 512 triples, non-associative, twist-stable",
              2.0, [&] {
                  AlgebraPtr O = catalog_octonions(q);
                  CheckReport l = check_left_alternative(*O);
                  CheckReport r = check_right_alternative(*O);
                  CheckReport as = check_bihom_associative(*O);
                  LinearMap s = catalog_automorphism("flip", O);
                  AlgebraPtr OY = yau_twist(O, s, s);
                  return l.pass && l.stats.tuples == 512 && r.pass && r.stats.tuples == 512 &&
                         !as.pass && !as.witnesses.empty() && check_left_alternative(*OY).pass &&
                         check_right_alternative(*OY).pass;
              });

    criterion(4, "symmetrized product: commutative, Jordan over 16 quadruples, ledger entry",
              10.0, [&] {
                  AlgebraPtr E = example_e5(ctx);
                  AlgebraPtr P = plus_algebra(E);
                  CheckReport cm = check_bihom_commutative(*P);
                  CheckReport jd = check_bihom_jordan(*P);
                  bool found = false;
                  for (const Erratum& e : erratum_ledger(ctx)) {
                      if (e.entry != "mu'(e1, e1)") continue;
                      found = e.transcribed.size() == 2 && e.recomputed.size() == 2 &&
                              e.transcribed[0] == parse_scalar(ctx, "(b-1)/b") &&
                              e.transcribed[1] == Scalar(ctx) &&
                              e.recomputed[0] == Scalar(ctx, 2L) && e.recomputed[1] == Scalar(ctx);
                  }
                  return cm.pass && jd.pass && jd.stats.tuples == 16 && found;
              });

    criterion(5, "linearized, symbolic, and sampled strategies agree across the catalog", 30.0,
              [&] { return run_suite("polarization", ctx).pass; });

    criterion(6, "averaging operator: identity holds, deformations stay alternative", 1.0, [&] {
        auto [T, R] = catalog_rb_toy(q);
        bool ops = check_rota_baxter(*T, R, Scalar(q)).pass &&
                   check_rota_baxter(*T, LinearMap::identity(q, 2), Scalar(q, -1L)).pass;
        AlgebraPtr TD = rota_baxter_deformation(T, R);
        BimodulePtr TW = rb_twist_bimodule(regular_bimodule(T), R);
        return ops && check_left_alternative(*TD).pass && check_right_alternative(*TD).pass &&
               check_alt_bimodule(*TW).pass;
    });

    criterion(7, "alternative bimodule chain: regular, shifts, twists, extension, quotient", 60.0,
              [&] { return run_suite("sne-alternative", ctx).pass; });

    criterion(8, "Jordan bimodule chain plus the merged special action pair", 120.0, [&] {
        if (!run_suite("sne-jordan", ctx).pass) return false;
        AlgebraPtr M = catalog_matrix2x2(ctx);
        AlgebraPtr P = plus_algebra(M);
        BimodulePtr W = special_pair_to_jordan_bimodule(P, M->dim(), M->alpha(), M->beta(),
                                                        M->mu_tensor(), M->mu_tensor());
        return check_jordan_bimodule(*W).pass;
    });

    criterion(9, "implication corpus: special/Jordan, operator commutativity, graph-morphism",
              0.0, [&] {
                  SuiteResult impl = run_suite("implications", ctx);
                  SuiteResult graph = run_suite("graph-morphism", ctx);
                  return impl.pass && graph.pass && graph.lines.size() >= 6;
              });

    criterion(10, "command line replicates the full corpus deterministically", 0.0, [&] {
        const std::string out1 = "acceptance_replicate_1.json";
        const std::string out2 = "acceptance_replicate_2.json";
        const std::string base = "\"" + cli + "\" replicate-paper --format structured";
        int rc1 = std::system((base + " > " + out1).c_str());
        int rc2 = std::system((base + " > " + out2).c_str());
        if (rc1 != 0 || rc2 != 0) return false;
        std::string a = slurp(out1), b = slurp(out2);
        return !a.empty() && a == b && a.find("\"status\": \"success\"") != std::string::npos;
    });

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria satisfied" << std::endl;
    return 0;
}
