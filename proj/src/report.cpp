#include "bihom/report.hpp"

#include <cmath>

#include "bihom/error.hpp"

namespace bihom {

CheckMode CheckMode::sampled(std::size_t points, std::uint64_t seed) {
    if (points < 1) throw Error("InvalidArgument", "sampled mode requires at least one point");
    return CheckMode{Strategy::Sampled, points, seed};
}

std::string strategy_label(const CheckMode& mode) {
    switch (mode.strategy) {
        case Strategy::Linearized: return "linearized-exhaustive";
        case Strategy::Symbolic: return "direct-symbolic";
        case Strategy::Sampled:
            return "direct-sampled(points=" + std::to_string(mode.points) +
                   ", seed=" + std::to_string(mode.seed) + ")";
    }
    throw Error("InvalidArgument", "unknown check strategy");
}

std::string Witness::where() const {
    if (tuple.empty()) return location;
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(tuple[i]);
    }
    return out + ")";
}

void CheckReport::add_witness(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
}

std::string render_text(const CheckReport& report, bool include_timing) {
    std::string out = report.pass ? "[PASS] " : "[FAIL] ";
    out += report.check_name;
    out += " (strategy=" + report.stats.strategy;
    out += ", tuples=" + std::to_string(report.stats.tuples);
    if (include_timing) {
        out += ", elapsed=" + std::to_string(std::lround(report.stats.elapsed_ms)) + "ms";
    }
    out += ")";
    for (const Witness& w : report.witnesses) {
        out += "\n  fail " + w.equation + " at " + w.where() + ": residual " + w.residual;
    }
    for (const std::string& n : report.notes) {
        out += "\n  note " + n;
    }
    return out;
}

}  // namespace bihom
