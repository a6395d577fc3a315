#pragma once

#include <string>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

// Curated cross-checks over the whole catalog.  Each suite bundles results
// that belong to one structural story (mode agreement, graph/morphism
// equivalence, implication chains, split null extension round trips) into
// deterministic pass/fail lines consumable by the DSL and the CLI.

struct SuiteLine {
    bool pass;
    std::string text;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::vector<SuiteLine> lines;

    void add(bool ok, std::string text) {
        pass = pass && ok;
        lines.push_back({ok, std::move(text)});
    }
};

// Verdict agreement of the linearized, direct-symbolic and direct-sampled
// strategies for both alternativity checks and the Jordan check on every
// catalog algebra (the Jordan check must be inapplicable consistently on the
// non-commutative entries).
SuiteResult suite_polarization(const ContextPtr& ctx);

// A linear map passes the morphism check exactly when its graph is a
// subalgebra of the direct sum; exercised on valid and corrupted maps.
SuiteResult suite_graph_morphism(const ContextPtr& ctx);

// Implication chains: regular actions read over the symmetrized host are
// special and hence Jordan modules; associative bimodules have commuting
// action operators; a merged special pair is the regular Jordan module of the
// symmetrized host.
SuiteResult suite_implications(const ContextPtr& ctx);

// Alternative closure chain on the octonions: regular bimodule, action
// shifts, automorphism twists, and the dim-16 split null extension with its
// ideal/quotient round trip.
SuiteResult suite_sne_alternative(const ContextPtr& ctx);

// Jordan closure chain on jordan_sym2: regular bimodule, shifts, conjugation
// deformation, and the dim-6 split null extension round trip.
SuiteResult suite_sne_jordan(const ContextPtr& ctx);

// Dispatch by suite name ("polarization", "graph-morphism", "implications",
// "sne-alternative", "sne-jordan"); throws UnknownTag.
SuiteResult run_suite(const std::string& name, const ContextPtr& ctx);

std::vector<std::string> suite_names();

}  // namespace bihom
