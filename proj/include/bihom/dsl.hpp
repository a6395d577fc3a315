#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bihom::dsl {

// 1-based line/column of a token in the source text.
struct SourcePos {
    std::size_t line = 0;
    std::size_t col = 1;
};

// ---------------------------------------------------------------------------
// Statement bodies.  The grammar is line-oriented; one statement per line,
// '#' starts a comment, blank lines are skipped.  Matrices use the
// columns-as-images convention: in `map A.alpha = [[1, 0], [2, -1]]` the j-th
// inner list holds the coordinates of the image of the j-th basis vector.
// Basis elements are written e1..en (algebras) and v1..vm (module carriers);
// witnesses in reports use 0-based indices.
// ---------------------------------------------------------------------------

struct ParamsStmt {
    std::vector<std::string> names;
    friend bool operator==(const ParamsStmt&, const ParamsStmt&) = default;
};

// `use catalog.<entry> as <alias>`
struct UseStmt {
    std::string entry;
    std::string alias;
    friend bool operator==(const UseStmt&, const UseStmt&) = default;
};

// `algebra A dim 2`
struct AlgebraStmt {
    std::string name;
    std::size_t dim = 0;
    friend bool operator==(const AlgebraStmt&, const AlgebraStmt&) = default;
};

// `bimodule V over A dim 1`
struct BimoduleStmt {
    std::string name;
    std::string host;
    std::size_t dim = 0;
    friend bool operator==(const BimoduleStmt&, const BimoduleStmt&) = default;
};

// `map A.alpha = [[...], [...]]`; slot is alpha/beta (algebras) or phi/psi
// (bimodules); columns[j][r] is the raw text of entry r of column j.
struct MapStmt {
    std::string owner;
    std::string slot;
    std::vector<std::vector<std::string>> columns;
    friend bool operator==(const MapStmt&, const MapStmt&) = default;
};

// `mu A e1 e2 = -a*e1 + b*e2`; i, j are 0-based here, 1-based in the source.
// Unset products stay zero.
struct MuStmt {
    std::string owner;
    std::size_t i = 0;
    std::size_t j = 0;
    std::string rhs;
    friend bool operator==(const MuStmt&, const MuStmt&) = default;
};

// `actl V e1 v1 = v1` (left action of e_i on v_p) or `actr V v1 e1 = v1`
// (right action of e_i on v_p); unset actions stay zero.
struct ActStmt {
    std::string owner;
    bool left = true;
    std::size_t algebra_index = 0;
    std::size_t module_index = 0;
    std::string rhs;
    friend bool operator==(const ActStmt&, const ActStmt&) = default;
};

// `let B = direct_sum(A, A2)`; args hold raw argument tokens (identifiers,
// non-negative integers, or bare tags such as automorphism names).
struct LetStmt {
    std::string name;
    std::string fn;
    std::vector<std::string> args;
    friend bool operator==(const LetStmt&, const LetStmt&) = default;
};

// `check B left-alternative mode=linearized seed=7 points=20 expect=fail`.
// For `check A rota-baxter R 0` args holds {map name, weight expression}.
struct CheckStmt {
    std::string target;
    std::string kind;
    std::vector<std::string> args;
    std::optional<std::string> mode;
    std::optional<std::size_t> points;
    std::optional<std::uint64_t> seed;
    bool expect_pass = true;
    bool expect_written = false;
    friend bool operator==(const CheckStmt&, const CheckStmt&) = default;
};

// `report errata`
struct ReportStmt {
    std::string what;
    friend bool operator==(const ReportStmt&, const ReportStmt&) = default;
};

// `suite polarization`
struct SuiteStmt {
    std::string name;
    friend bool operator==(const SuiteStmt&, const SuiteStmt&) = default;
};

using StatementBody = std::variant<ParamsStmt, UseStmt, AlgebraStmt, BimoduleStmt, MapStmt, MuStmt,
                                   ActStmt, LetStmt, CheckStmt, ReportStmt, SuiteStmt>;

struct Statement {
    StatementBody body;
    SourcePos pos;
};

// Structural equality ignores source positions.
inline bool operator==(const Statement& x, const Statement& y) { return x.body == y.body; }
inline bool operator!=(const Statement& x, const Statement& y) { return !(x == y); }

struct Document {
    std::vector<Statement> statements;
};

inline bool operator==(const Document& x, const Document& y) {
    return x.statements == y.statements;
}

// Parses a document; throws Error with kind SyntaxError (message carries
// "line L, col C: expected ..."), UnknownIdentifier, or RedefinedName.
// Names bind exactly once and must be defined before use; basis indices are
// range-checked against statically known dimensions already at parse time.
Document parse(const std::string& source);

// Canonical one-line-per-statement rendering; parse(render(parse(s))) is
// structurally equal to parse(s).
std::string render(const Document& doc);
std::string render(const Statement& statement);

struct RunOptions {
    // Default mode for mode-capable check directives that do not spell their
    // own mode= attribute: "linearized", "symbolic", or "sampled".
    std::optional<std::string> mode_override;
    // Default seed for sampled runs without an explicit seed= attribute.
    std::optional<std::uint64_t> seed_override;
};

// Execution result.  `success` is true iff every check and suite directive
// matched its expectation (checks default to expect=pass).  Both renderings
// are deterministic: the same document yields byte-identical text and
// structured reports; timing never appears in either.
struct RunResult {
    bool success = true;
    std::string text;        // human-readable report
    std::string structured;  // canonical key-sorted JSON report
};

// Executes statements in order.  Operation failures (bad matrices, catalog
// misses, prerequisite violations, ...) are rethrown with the originating
// statement location prefixed to the message.
RunResult run(const Document& doc, const RunOptions& options = {});
RunResult run_source(const std::string& source, const RunOptions& options = {});

// The built-in replication document executed by the CLI's replicate-paper
// command: parametric families, octonions, symmetrized products, operator
// deformations, bimodule construction chains, implication suites, and the
// erratum ledger.
const std::string& builtin_replication_document();

}  // namespace bihom::dsl
