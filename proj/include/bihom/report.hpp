#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bihom {

// How a non-multilinear identity is decided.  Multilinear identities are
// always checked exhaustively over basis tuples, which is complete; the
// quadratic/cubic identities additionally offer direct checks on generic
// symbolic elements or on seeded random samples.
enum class Strategy {
    Linearized,  // multilinear (polarized) form over all basis tuples
    Symbolic,    // direct form on generic elements with fresh parameters
    Sampled,     // direct form on seeded random integer coordinates
};

struct CheckMode {
    Strategy strategy = Strategy::Linearized;
    std::size_t points = 50;     // sampled mode only
    std::uint64_t seed = 2026;   // sampled mode only

    static CheckMode linearized() { return CheckMode{}; }
    static CheckMode symbolic() { return CheckMode{Strategy::Symbolic, 0, 0}; }
    static CheckMode sampled(std::size_t points = 50, std::uint64_t seed = 2026);
};

std::string strategy_label(const CheckMode& mode);

// One violation of one equation: either a tuple of 0-based basis indices (for
// exhaustive runs) or a textual description of the generic/sampled point, plus
// the nonzero residual vector rendered as scalar text.
struct Witness {
    std::string equation;
    std::vector<std::size_t> tuple;
    std::string location;  // used when tuple is empty
    std::string residual;

    std::string where() const;  // "(i, j, k)" or the location text
};

struct CheckStats {
    std::uint64_t tuples = 0;
    double elapsed_ms = 0.0;
    std::string strategy;
};

// Verdict of one identity check.  pass is true exactly when witnesses is
// empty; on failure each violated equation reports its lexicographically
// least failing tuple.
struct CheckReport {
    std::string check_name;
    bool pass = true;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    CheckStats stats;

    void add_witness(Witness w);
    void note(std::string text) { notes.push_back(std::move(text)); }
};

// Renders "[PASS] name (strategy=..., tuples=N)" plus witness and note lines.
// Timing is opt-in so that rendered reports stay byte-stable.
std::string render_text(const CheckReport& report, bool include_timing = false);

}  // namespace bihom
