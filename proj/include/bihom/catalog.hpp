#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

// Built-in example algebras: classical seed algebras with identity twists
// (ready to be made genuinely BiHom by twisting) and two-dimensional
// parametric families over Q(a, b) whose twist maps are nontrivial.

// 8-dimensional alternative division algebra on the basis e1..e8 (unit e1),
// identity twists.  Alternative but not associative.
AlgebraPtr catalog_octonions(const ContextPtr& ctx);

// Full 2x2 matrix algebra on the unit-matrix basis E11, E12, E21, E22,
// identity twists.  Associative but not commutative.
AlgebraPtr catalog_matrix2x2(const ContextPtr& ctx);

// Symmetric 2x2 matrices under the half anticommutator x*y = (xy+yx)/2 on the
// basis E11, (E12+E21), E22, identity twists.  Commutative and Jordan but not
// associative.
AlgebraPtr catalog_jordan_sym2(const ContextPtr& ctx);

// 2-dimensional algebra with mu(e1,e1) = e2 and all other products zero,
// identity twists, paired with the weight-0 Rota-Baxter operator diag(0, 1).
std::pair<AlgebraPtr, LinearMap> catalog_rb_toy(const ContextPtr& ctx);

// The two 2-dimensional parametric families over Q(a, b).  The symbolic
// variants require the context to provide parameters named `a` and `b`; the
// `_at` variants evaluate the tables at rational points over the constant
// context and throw ParameterExcluded when the point hits an exclusion
// (b != 1 for the first family, a != 0 for the second).
AlgebraPtr example_e1_first(const ContextPtr& ctx);
AlgebraPtr example_e1_second(const ContextPtr& ctx);
std::pair<AlgebraPtr, AlgebraPtr> example_e1_pair(const ContextPtr& ctx);
AlgebraPtr example_e1_first_at(const Rational& a, const Rational& b);
AlgebraPtr example_e1_second_at(const Rational& a, const Rational& b);
std::pair<AlgebraPtr, AlgebraPtr> example_e1_pair_at(const Rational& a, const Rational& b);

// The first parametric family with the stronger exclusion b outside {0, 1},
// under which both twist maps are invertible (the family is regular) and the
// symmetrized product of plus_algebra applies.
AlgebraPtr example_e5(const ContextPtr& ctx);
AlgebraPtr example_e5_at(const Rational& a, const Rational& b);

// Built-in automorphisms, addressed by tag:
//   "id"   - the identity on any host;
//   "flip" - on octonions, negation of the non-quaternionic half e5..e8;
//   "conj" - on matrix2x2 or jordan_sym2, conjugation by diag(1, -1).
// Throws UnknownTag when the tag does not name an automorphism of the host.
LinearMap catalog_automorphism(const std::string& tag, const AlgebraPtr& host);

// Name-based dispatch used by the DSL (`use catalog.<name> as X`).  Algebra
// names: octonions, matrix2x2, jordan_sym2, rb_toy, e1.first, e1.second, e5.
// Map names: rb_toy.op.  Throws UnknownTag for anything else.
AlgebraPtr catalog_algebra(const std::string& name, const ContextPtr& ctx);
LinearMap catalog_map(const std::string& name, const ContextPtr& ctx);

struct CatalogEntry {
    std::string name;
    std::string summary;
};
std::vector<CatalogEntry> catalog_list();

// Erratum ledger.  The catalog keeps verbatim transcriptions of the source
// tables it was built from; wherever exact recomputation contradicts a
// transcribed entry, the ledger records both sides.  Vector-valued entries
// carry coordinates over the subject's basis; the direct-sum artifact entry
// is a note only.
struct Erratum {
    std::string subject;
    std::string entry;
    Vec transcribed;
    Vec recomputed;
    std::string note;
};
std::vector<Erratum> erratum_ledger(const ContextPtr& ctx);

// Stable text rendering of the ledger, one numbered line per entry.
std::string erratum_report(const ContextPtr& ctx);

}  // namespace bihom
