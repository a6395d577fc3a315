#include "bihom/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bihom/algebra.hpp"
#include "bihom/bimodule.hpp"
#include "bihom/bimodule_constructions.hpp"
#include "bihom/catalog.hpp"
#include "bihom/checks.hpp"
#include "bihom/constructions.hpp"
#include "bihom/error.hpp"
#include "bihom/linalg.hpp"
#include "bihom/report.hpp"
#include "bihom/scalar.hpp"
#include "bihom/suites.hpp"

namespace bihom::dsl {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Small text helpers
// ---------------------------------------------------------------------------

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && is_space(s[a])) ++a;
    while (b > a && is_space(s[b - 1])) --b;
    return s.substr(a, b - a);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string pos_str(std::size_t line, std::size_t col) {
    return "line " + std::to_string(line) + ", col " + std::to_string(col);
}

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& expected) {
    throw Error("SyntaxError", pos_str(line, col) + ": " + expected);
}

bool is_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// A basis token is the prefix letter followed by a 1-based decimal index.
bool is_basis_token(const std::string& s, char prefix) {
    return s.size() >= 2 && s[0] == prefix && all_digits(s.substr(1));
}

struct Token {
    std::string text;
    std::size_t col = 1;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        out.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear-combination terms: `-a^2*(b-2)/(b-1)^2 * e1 + a*e2`.  A term is a
// product of '*'-separated factors at parenthesis depth zero; at most one
// factor names a basis element, the rest form the coefficient expression.
// ---------------------------------------------------------------------------

struct RawTerm {
    bool negative = false;
    std::string coeff;  // empty means 1
    std::optional<std::size_t> basis;  // 0-based
};

std::vector<RawTerm> split_terms(const std::string& s, char prefix, std::optional<std::size_t> dim,
                                 std::size_t line, std::size_t col0) {
    auto err = [&](std::size_t off, const std::string& msg) -> void {
        syntax_error(line, col0 + off, msg);
    };
    std::vector<RawTerm> out;
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && is_space(s[i])) ++i;
    };
    skip_ws();
    if (i == n) err(0, "expected a linear combination");
    while (i < n) {
        bool neg = false;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
            skip_ws();
        }
        const std::size_t start = i;
        int depth = 0;
        char prev = 0;
        while (i < n) {
            char c = s[i];
            if (c == '(') {
                ++depth;
            } else if (c == ')') {
                if (--depth < 0) err(i, "unbalanced ')'");
            } else if ((c == '+' || c == '-') && depth == 0 && i > start) {
                if (prev != 0 && std::string("*/^(").find(prev) == std::string::npos) break;
            } else if (c == '[' || c == ']') {
                err(i, "brackets are not allowed in a linear combination");
            }
            if (!is_space(c)) prev = c;
            ++i;
        }
        if (depth != 0) err(start, "unbalanced '('");
        std::string term = trim(s.substr(start, i - start));
        if (term.empty()) err(start, "expected a term");

        // Split the term into factors at '*' outside parentheses.
        std::vector<std::pair<std::string, std::size_t>> factors;
        {
            std::size_t fs = 0;
            int d = 0;
            for (std::size_t k = 0; k <= term.size(); ++k) {
                if (k == term.size() || (term[k] == '*' && d == 0)) {
                    factors.emplace_back(term.substr(fs, k - fs), fs);
                    fs = k + 1;
                } else if (term[k] == '(') {
                    ++d;
                } else if (term[k] == ')') {
                    --d;
                }
            }
        }
        RawTerm t;
        t.negative = neg;
        std::vector<std::string> coeff_parts;
        for (const auto& [raw, off] : factors) {
            std::string f = trim(raw);
            if (f.empty()) err(start + off, "empty factor in a term");
            if (is_basis_token(f, prefix)) {
                std::size_t idx = std::stoull(f.substr(1));
                if (idx == 0) err(start + off, "basis indices start at 1");
                if (dim && idx > *dim)
                    throw Error("UnknownIdentifier",
                                pos_str(line, col0 + start + off) + ": basis element " + f +
                                    " is not defined (dimension is " + std::to_string(*dim) + ")");
                if (t.basis) err(start + off, "a term may name at most one basis element");
                t.basis = idx - 1;
            } else {
                // Catch `e1 e2` (missing operator) early: a coefficient factor
                // must not embed a whole basis word.
                std::string word;
                for (std::size_t k = 0; k <= f.size(); ++k) {
                    if (k < f.size() && (std::isalnum(static_cast<unsigned char>(f[k])) || f[k] == '_')) {
                        word += f[k];
                        continue;
                    }
                    if (is_basis_token(word, prefix))
                        err(start + off, "basis elements must be separated by '*', '+', or '-'");
                    word.clear();
                }
                coeff_parts.push_back(f);
            }
        }
        t.coeff = join(coeff_parts, "*");
        out.push_back(std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrix literals: `[[1, 0], [2*a/(b-1), -1]]`, columns as images.
// ---------------------------------------------------------------------------

std::vector<std::vector<std::string>> parse_matrix(const std::string& s, std::size_t line,
                                                   std::size_t col0) {
    auto err = [&](std::size_t off, const std::string& msg) -> void {
        syntax_error(line, col0 + off, msg);
    };
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && is_space(s[i])) ++i;
    };
    skip_ws();
    if (i >= n || s[i] != '[') err(i, "expected '[' to start a matrix");
    ++i;
    skip_ws();
    if (i < n && s[i] == ']') err(i, "expected at least one column");
    std::vector<std::vector<std::string>> cols;
    while (true) {
        skip_ws();
        if (i >= n || s[i] != '[') err(i, "expected '[' to start a column");
        ++i;
        std::vector<std::string> col;
        while (true) {
            std::size_t es = i;
            int depth = 0;
            while (i < n) {
                char c = s[i];
                if (c == '(') {
                    ++depth;
                } else if (c == ')') {
                    if (--depth < 0) err(i, "unbalanced ')'");
                } else if ((c == ',' || c == ']') && depth == 0) {
                    break;
                } else if (c == '[') {
                    err(i, "unexpected '[' inside a column");
                }
                ++i;
            }
            if (i >= n) err(i, "expected ',' or ']' in a column");
            std::string entry = trim(s.substr(es, i - es));
            if (entry.empty()) err(es, "expected a matrix entry");
            col.push_back(entry);
            if (s[i] == ']') {
                ++i;
                break;
            }
            ++i;  // ','
        }
        cols.push_back(std::move(col));
        skip_ws();
        if (i < n && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < n && s[i] == ']') {
            ++i;
            break;
        }
        err(i, "expected ',' or ']' after a column");
    }
    skip_ws();
    if (i != n) err(i, "unexpected text after the matrix");
    return cols;
}

// ---------------------------------------------------------------------------
// Static tables: catalog entries, constructions, check kinds, suites.
// ---------------------------------------------------------------------------

struct CatalogInfo {
    char kind;  // 'A' algebra, 'M' map
    std::size_t dim;
};

const std::map<std::string, CatalogInfo>& catalog_table() {
    static const std::map<std::string, CatalogInfo> t = {
        {"e1.first", {'A', 2}},   {"e1.second", {'A', 2}},   {"e5", {'A', 2}},
        {"octonions", {'A', 8}},  {"matrix2x2", {'A', 4}},   {"jordan_sym2", {'A', 3}},
        {"rb_toy", {'A', 2}},     {"rb_toy.op", {'M', 2}},
    };
    return t;
}

// Argument kinds: 'a' algebra, 'b' bimodule, 'm' map, 'i' non-negative
// integer, 'w' bare word (automorphism tag, extension selector).
struct FnInfo {
    std::string sig;
    char result;  // 'A', 'B', or 'M'
};

const std::map<std::string, FnInfo>& fn_table() {
    static const std::map<std::string, FnInfo> t = {
        {"direct_sum", {"aa", 'A'}},
        {"tensor_product", {"aa", 'A'}},
        {"yau_twist", {"amm", 'A'}},
        {"power_twist", {"ai", 'A'}},
        {"rota_baxter_deformation", {"am", 'A'}},
        {"plus_algebra", {"a", 'A'}},
        {"sne", {"abw", 'A'}},
        {"regular", {"a", 'B'}},
        {"shift", {"bii", 'B'}},
        {"twist", {"bmmmm", 'B'}},
        {"twist_powers", {"biiiiii", 'B'}},
        {"rb_twist", {"bm", 'B'}},
        {"jordan_shift", {"bi", 'B'}},
        {"jordan_deform", {"bmmmm", 'B'}},
        {"jordan_deform_powers", {"bmmmmi", 'B'}},
        {"rehost", {"ba", 'B'}},
        {"automorphism", {"wa", 'M'}},
    };
    return t;
}

struct CheckKindInfo {
    char target;  // 'a' algebra, 'b' bimodule
    bool moded;
    bool rota;
};

const std::map<std::string, CheckKindInfo>& check_kind_table() {
    static const std::map<std::string, CheckKindInfo> t = {
        {"validate", {'a', false, false}},
        {"associative", {'a', false, false}},
        {"commutative", {'a', false, false}},
        {"left-alternative", {'a', true, false}},
        {"right-alternative", {'a', true, false}},
        {"jordan", {'a', true, false}},
        {"rota-baxter", {'a', false, true}},
        {"assoc-bimodule", {'b', false, false}},
        {"alt-bimodule", {'b', true, false}},
        {"jordan-bimodule", {'b', false, false}},
        {"left-jordan-module", {'b', true, false}},
        {"right-jordan-module", {'b', true, false}},
        {"left-special", {'b', false, false}},
        {"right-special", {'b', false, false}},
        {"operator-commutativity", {'b', false, false}},
    };
    return t;
}

std::string known_keys_hint(const std::map<std::string, CheckKindInfo>& t) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : t) keys.push_back(k);
    return join(keys, ", ");
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct SymInfo {
    char kind = '?';  // 'A', 'B', 'M', or '?' (unknown catalog entry)
    std::optional<std::size_t> dim;       // algebra dim / module carrier dim
    std::optional<std::size_t> host_dim;  // bimodules only
    bool definable = false;               // declared by algebra/bimodule statement
};

struct ParseState {
    std::map<std::string, SymInfo> syms;
    std::set<std::string> slots;     // "A.alpha" already written
    std::set<std::string> products;  // "A[i,j]" already written
    std::set<std::string> actions;   // "V[l,i,p]" already written
    bool saw_params = false;
    bool saw_other = false;
};

const SymInfo& lookup(const ParseState& st, const Token& t, std::size_t line) {
    auto it = st.syms.find(t.text);
    if (it == st.syms.end())
        throw Error("UnknownIdentifier",
                    pos_str(line, t.col) + ": name '" + t.text + "' is not defined");
    return it->second;
}

void bind(ParseState& st, const Token& t, std::size_t line, SymInfo info) {
    if (!is_ident(t.text)) syntax_error(line, t.col, "expected an identifier");
    if (st.syms.count(t.text))
        throw Error("RedefinedName",
                    pos_str(line, t.col) + ": name '" + t.text + "' is already bound");
    st.syms.emplace(t.text, std::move(info));
}

std::size_t parse_size_token(const Token& t, std::size_t line, const std::string& what) {
    if (!all_digits(t.text)) syntax_error(line, t.col, "expected " + what);
    try {
        return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
        syntax_error(line, t.col, what + " is too large");
    }
}

// 0-based basis index from a token like e2 / v1, range-checked when the
// dimension is statically known.
std::size_t parse_basis_token(const Token& t, char prefix, std::optional<std::size_t> dim,
                              std::size_t line) {
    if (!is_basis_token(t.text, prefix))
        syntax_error(line, t.col, std::string("expected a basis element like ") + prefix + "1");
    std::size_t idx = std::stoull(t.text.substr(1));
    if (idx == 0) syntax_error(line, t.col, "basis indices start at 1");
    if (dim && idx > *dim)
        throw Error("UnknownIdentifier", pos_str(line, t.col) + ": basis element " + t.text +
                                             " is not defined (dimension is " +
                                             std::to_string(*dim) + ")");
    return idx - 1;
}

void expect_end(const std::vector<Token>& toks, std::size_t from, std::size_t line) {
    if (toks.size() > from)
        syntax_error(line, toks[from].col, "unexpected token '" + toks[from].text + "'");
}

// Raw text after the standalone '=' token, trimmed, with its starting column.
std::pair<std::string, std::size_t> tail_after(const std::string& line_text, const Token& eq,
                                               std::size_t line) {
    std::size_t idx = eq.col;  // 0-based index of the char right after '='
    while (idx < line_text.size() && is_space(line_text[idx])) ++idx;
    std::string tail = trim(line_text.substr(idx));
    if (tail.empty()) syntax_error(line, idx + 1, "expected an expression after '='");
    return {tail, idx + 1};
}

void parse_check_attrs(CheckStmt& c, const std::vector<Token>& toks, std::size_t from,
                       std::size_t line, bool moded) {
    for (std::size_t k = from; k < toks.size(); ++k) {
        const Token& t = toks[k];
        auto eq = t.text.find('=');
        if (eq == std::string::npos || eq == 0)
            syntax_error(line, t.col, "expected key=value attribute");
        std::string key = t.text.substr(0, eq);
        std::string val = t.text.substr(eq + 1);
        if (key == "mode") {
            if (!moded)
                syntax_error(line, t.col, "check kind '" + c.kind + "' does not take a mode");
            if (c.mode) syntax_error(line, t.col, "duplicate attribute 'mode'");
            if (val != "linearized" && val != "symbolic" && val != "sampled")
                syntax_error(line, t.col, "expected mode=linearized|symbolic|sampled");
            c.mode = val;
        } else if (key == "points") {
            if (!moded)
                syntax_error(line, t.col, "check kind '" + c.kind + "' does not take points");
            if (c.points) syntax_error(line, t.col, "duplicate attribute 'points'");
            if (!all_digits(val)) syntax_error(line, t.col, "expected points=<non-negative integer>");
            c.points = static_cast<std::size_t>(std::stoull(val));
        } else if (key == "seed") {
            if (!moded) syntax_error(line, t.col, "check kind '" + c.kind + "' does not take a seed");
            if (c.seed) syntax_error(line, t.col, "duplicate attribute 'seed'");
            if (!all_digits(val)) syntax_error(line, t.col, "expected seed=<non-negative integer>");
            c.seed = std::stoull(val);
        } else if (key == "expect") {
            if (c.expect_written) syntax_error(line, t.col, "duplicate attribute 'expect'");
            if (val != "pass" && val != "fail") syntax_error(line, t.col, "expected expect=pass|fail");
            c.expect_pass = (val == "pass");
            c.expect_written = true;
        } else {
            syntax_error(line, t.col, "unknown attribute '" + key + "'");
        }
    }
}

}  // namespace

Document parse(const std::string& source) {
    Document doc;
    ParseState st;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= source.size()) {
        std::size_t nl = source.find('\n', start);
        std::string line_text =
            nl == std::string::npos ? source.substr(start) : source.substr(start, nl - start);
        start = nl == std::string::npos ? source.size() + 1 : nl + 1;
        ++line_no;

        auto hash = line_text.find('#');
        if (hash != std::string::npos) line_text = line_text.substr(0, hash);
        std::vector<Token> toks = tokenize(line_text);
        if (toks.empty()) continue;

        const Token& head = toks[0];
        const std::size_t ln = line_no;
        SourcePos pos{ln, head.col};
        auto need = [&](std::size_t k, const std::string& what) -> const Token& {
            if (toks.size() <= k) {
                std::size_t col = line_text.size() + 1;
                syntax_error(ln, col, "expected " + what);
            }
            return toks[k];
        };
        auto need_word = [&](std::size_t k, const std::string& word) {
            const Token& t = need(k, "'" + word + "'");
            if (t.text != word) syntax_error(ln, t.col, "expected '" + word + "'");
        };

        if (head.text == "params") {
            if (st.saw_params || st.saw_other)
                syntax_error(ln, head.col, "params must appear once, before any definition");
            ParamsStmt s;
            if (toks.size() < 2) syntax_error(ln, head.col, "expected at least one parameter name");
            std::set<std::string> seen;
            for (std::size_t k = 1; k < toks.size(); ++k) {
                const Token& t = toks[k];
                if (!is_ident(t.text)) syntax_error(ln, t.col, "expected a parameter name");
                if (is_basis_token(t.text, 'e') || is_basis_token(t.text, 'v'))
                    syntax_error(ln, t.col, "parameter name collides with basis element naming");
                if (!seen.insert(t.text).second)
                    syntax_error(ln, t.col, "duplicate parameter '" + t.text + "'");
                s.names.push_back(t.text);
            }
            st.saw_params = true;
            doc.statements.push_back({s, pos});
            continue;
        }
        st.saw_other = true;

        if (head.text == "use") {
            const Token& t1 = need(1, "catalog.<entry>");
            const std::string prefix = "catalog.";
            if (t1.text.rfind(prefix, 0) != 0 || t1.text.size() == prefix.size())
                syntax_error(ln, t1.col, "expected catalog.<entry>");
            UseStmt s;
            s.entry = t1.text.substr(prefix.size());
            need_word(2, "as");
            const Token& t3 = need(3, "an alias name");
            expect_end(toks, 4, ln);
            SymInfo info;
            auto it = catalog_table().find(s.entry);
            if (it != catalog_table().end()) {
                info.kind = it->second.kind;
                info.dim = it->second.dim;
            }
            bind(st, t3, ln, info);
            s.alias = t3.text;
            doc.statements.push_back({s, pos});
        } else if (head.text == "algebra") {
            const Token& t1 = need(1, "an algebra name");
            need_word(2, "dim");
            const Token& t3 = need(3, "a dimension");
            expect_end(toks, 4, ln);
            AlgebraStmt s;
            s.name = t1.text;
            s.dim = parse_size_token(t3, ln, "a positive dimension");
            if (s.dim == 0) syntax_error(ln, t3.col, "expected a positive dimension");
            bind(st, t1, ln, SymInfo{'A', s.dim, std::nullopt, true});
            doc.statements.push_back({s, pos});
        } else if (head.text == "bimodule") {
            const Token& t1 = need(1, "a bimodule name");
            need_word(2, "over");
            const Token& t3 = need(3, "a host algebra name");
            need_word(4, "dim");
            const Token& t5 = need(5, "a dimension");
            expect_end(toks, 6, ln);
            const SymInfo& host = lookup(st, t3, ln);
            if (host.kind != 'A' && host.kind != '?')
                syntax_error(ln, t3.col, "expected an algebra name as host");
            BimoduleStmt s;
            s.name = t1.text;
            s.host = t3.text;
            s.dim = parse_size_token(t5, ln, "a positive dimension");
            if (s.dim == 0) syntax_error(ln, t5.col, "expected a positive dimension");
            bind(st, t1, ln, SymInfo{'B', s.dim, host.dim, true});
            doc.statements.push_back({s, pos});
        } else if (head.text == "map") {
            const Token& t1 = need(1, "<owner>.<slot>");
            auto dot = t1.text.find('.');
            if (dot == std::string::npos || dot == 0 || dot + 1 == t1.text.size() ||
                t1.text.find('.', dot + 1) != std::string::npos)
                syntax_error(ln, t1.col, "expected <owner>.<slot>");
            MapStmt s;
            s.owner = t1.text.substr(0, dot);
            s.slot = t1.text.substr(dot + 1);
            Token owner_tok{s.owner, t1.col};
            const SymInfo& owner = lookup(st, owner_tok, ln);
            if (!owner.definable)
                syntax_error(ln, t1.col,
                             "map definitions apply only to names declared by algebra/bimodule "
                             "statements");
            const bool is_alg = owner.kind == 'A';
            if (is_alg && s.slot != "alpha" && s.slot != "beta")
                syntax_error(ln, t1.col, "expected slot alpha or beta");
            if (!is_alg && s.slot != "phi" && s.slot != "psi")
                syntax_error(ln, t1.col, "expected slot phi or psi");
            if (!st.slots.insert(t1.text).second)
                throw Error("RedefinedName",
                            pos_str(ln, t1.col) + ": map " + t1.text + " is already defined");
            const Token& eq = need(2, "'='");
            if (eq.text != "=") syntax_error(ln, eq.col, "expected '='");
            auto [tail, tcol] = tail_after(line_text, eq, ln);
            s.columns = parse_matrix(tail, ln, tcol);
            const std::size_t want = *owner.dim;  // definable names always carry a dim
            if (s.columns.size() != want)
                syntax_error(ln, tcol,
                             "map " + t1.text + " has " + std::to_string(s.columns.size()) +
                                 " columns, expected " + std::to_string(want));
            for (std::size_t c = 0; c < s.columns.size(); ++c)
                if (s.columns[c].size() != want)
                    syntax_error(ln, tcol,
                                 "map " + t1.text + " column " + std::to_string(c + 1) + " has " +
                                     std::to_string(s.columns[c].size()) + " entries, expected " +
                                     std::to_string(want));
            doc.statements.push_back({s, pos});
        } else if (head.text == "mu") {
            const Token& t1 = need(1, "an algebra name");
            const SymInfo& owner = lookup(st, t1, ln);
            if (owner.kind != 'A' || !owner.definable)
                syntax_error(ln, t1.col,
                             "product definitions apply only to names declared by algebra "
                             "statements");
            MuStmt s;
            s.owner = t1.text;
            s.i = parse_basis_token(need(2, "a basis element"), 'e', owner.dim, ln);
            s.j = parse_basis_token(need(3, "a basis element"), 'e', owner.dim, ln);
            std::string key = s.owner + "[" + std::to_string(s.i) + "," + std::to_string(s.j) + "]";
            if (!st.products.insert(key).second)
                throw Error("RedefinedName", pos_str(ln, toks[2].col) + ": product mu " + s.owner +
                                                 " e" + std::to_string(s.i + 1) + " e" +
                                                 std::to_string(s.j + 1) + " is already defined");
            const Token& eq = need(4, "'='");
            if (eq.text != "=") syntax_error(ln, eq.col, "expected '='");
            auto [tail, tcol] = tail_after(line_text, eq, ln);
            split_terms(tail, 'e', owner.dim, ln, tcol);  // structural + range validation
            s.rhs = tail;
            doc.statements.push_back({s, pos});
        } else if (head.text == "actl" || head.text == "actr") {
            const bool left = head.text == "actl";
            const Token& t1 = need(1, "a bimodule name");
            const SymInfo& owner = lookup(st, t1, ln);
            if (owner.kind != 'B' || !owner.definable)
                syntax_error(ln, t1.col,
                             "action definitions apply only to names declared by bimodule "
                             "statements");
            ActStmt s;
            s.owner = t1.text;
            s.left = left;
            if (left) {
                s.algebra_index = parse_basis_token(need(2, "a basis element"), 'e', owner.host_dim, ln);
                s.module_index = parse_basis_token(need(3, "a carrier element"), 'v', owner.dim, ln);
            } else {
                s.module_index = parse_basis_token(need(2, "a carrier element"), 'v', owner.dim, ln);
                s.algebra_index = parse_basis_token(need(3, "a basis element"), 'e', owner.host_dim, ln);
            }
            std::string key = s.owner + "[" + (left ? "l" : "r") + "," +
                              std::to_string(s.algebra_index) + "," + std::to_string(s.module_index) +
                              "]";
            if (!st.actions.insert(key).second)
                throw Error("RedefinedName",
                            pos_str(ln, toks[2].col) + ": this action entry is already defined");
            const Token& eq = need(4, "'='");
            if (eq.text != "=") syntax_error(ln, eq.col, "expected '='");
            auto [tail, tcol] = tail_after(line_text, eq, ln);
            split_terms(tail, 'v', owner.dim, ln, tcol);
            s.rhs = tail;
            doc.statements.push_back({s, pos});
        } else if (head.text == "let") {
            const Token& t1 = need(1, "a name");
            const Token& eq = need(2, "'='");
            if (eq.text != "=") syntax_error(ln, eq.col, "expected '='");
            auto [tail, tcol] = tail_after(line_text, eq, ln);
            auto paren = tail.find('(');
            if (paren == std::string::npos || tail.back() != ')')
                syntax_error(ln, tcol, "expected <construction>(<args>)");
            LetStmt s;
            s.name = t1.text;
            s.fn = trim(tail.substr(0, paren));
            auto fit = fn_table().find(s.fn);
            if (fit == fn_table().end()) {
                std::vector<std::string> names;
                for (const auto& [k, v] : fn_table()) names.push_back(k);
                syntax_error(ln, tcol,
                             "unknown construction '" + s.fn + "' (expected one of: " +
                                 join(names, ", ") + ")");
            }
            std::string inner = tail.substr(paren + 1, tail.size() - paren - 2);
            std::vector<std::string> args;
            if (!trim(inner).empty()) {
                std::size_t as = 0;
                for (std::size_t k = 0; k <= inner.size(); ++k) {
                    if (k == inner.size() || inner[k] == ',') {
                        std::string a = trim(inner.substr(as, k - as));
                        if (a.empty()) syntax_error(ln, tcol, "empty construction argument");
                        args.push_back(a);
                        as = k + 1;
                    }
                }
            }
            const FnInfo& fn = fit->second;
            if (args.size() != fn.sig.size())
                syntax_error(ln, tcol,
                             "construction '" + s.fn + "' takes " +
                                 std::to_string(fn.sig.size()) + " arguments, got " +
                                 std::to_string(args.size()));
            SymInfo result;
            result.kind = fn.result;
            std::vector<const SymInfo*> arg_infos(args.size(), nullptr);
            for (std::size_t k = 0; k < args.size(); ++k) {
                char want = fn.sig[k];
                Token at{args[k], tcol};
                if (want == 'i') {
                    if (!all_digits(args[k]))
                        syntax_error(ln, tcol,
                                     "argument " + std::to_string(k + 1) + " of '" + s.fn +
                                         "' must be a non-negative integer");
                } else if (want == 'w') {
                    if (!is_ident(args[k]))
                        syntax_error(ln, tcol,
                                     "argument " + std::to_string(k + 1) + " of '" + s.fn +
                                         "' must be a bare word");
                } else {
                    const SymInfo& info = lookup(st, at, ln);
                    char got = info.kind;
                    char need_kind = want == 'a' ? 'A' : want == 'b' ? 'B' : 'M';
                    if (got != '?' && got != need_kind)
                        syntax_error(ln, tcol,
                                     "argument " + std::to_string(k + 1) + " of '" + s.fn +
                                         "' must be " +
                                         (want == 'a'   ? "an algebra"
                                          : want == 'b' ? "a bimodule"
                                                        : "a map"));
                    arg_infos[k] = &info;
                }
            }
            // Best-effort dimension propagation for later static checks.
            auto adim = [&](std::size_t k) -> std::optional<std::size_t> {
                return arg_infos[k] ? arg_infos[k]->dim : std::nullopt;
            };
            if (s.fn == "direct_sum") {
                if (adim(0) && adim(1)) result.dim = *adim(0) + *adim(1);
            } else if (s.fn == "tensor_product") {
                if (adim(0) && adim(1)) result.dim = *adim(0) * *adim(1);
            } else if (s.fn == "yau_twist" || s.fn == "power_twist" ||
                       s.fn == "rota_baxter_deformation" || s.fn == "plus_algebra") {
                result.dim = adim(0);
            } else if (s.fn == "sne") {
                if (adim(0) && adim(1)) result.dim = *adim(0) + *adim(1);
            } else if (s.fn == "regular") {
                result.dim = adim(0);
                result.host_dim = adim(0);
            } else if (s.fn == "rehost") {
                result.dim = adim(0);
                result.host_dim = adim(1);
            } else if (fn.result == 'B') {
                result.dim = adim(0);
                result.host_dim = arg_infos[0] ? arg_infos[0]->host_dim : std::nullopt;
            }
            bind(st, t1, ln, result);
            s.args = std::move(args);
            doc.statements.push_back({s, pos});
        } else if (head.text == "check") {
            const Token& t1 = need(1, "a target name");
            const SymInfo& target = lookup(st, t1, ln);
            const Token& t2 = need(2, "a check kind");
            auto kit = check_kind_table().find(t2.text);
            if (kit == check_kind_table().end())
                syntax_error(ln, t2.col,
                             "unknown check kind '" + t2.text +
                                 "' (expected one of: " + known_keys_hint(check_kind_table()) + ")");
            const CheckKindInfo& kind = kit->second;
            if (target.kind != '?' && target.kind != (kind.target == 'a' ? 'A' : 'B'))
                syntax_error(ln, t1.col,
                             std::string("check '") + t2.text + "' applies to " +
                                 (kind.target == 'a' ? "an algebra" : "a bimodule"));
            CheckStmt s;
            s.target = t1.text;
            s.kind = t2.text;
            std::size_t from = 3;
            if (kind.rota) {
                const Token& tm = need(3, "a map name");
                if (tm.text.find('=') != std::string::npos)
                    syntax_error(ln, tm.col, "expected a map name");
                const SymInfo& m = lookup(st, tm, ln);
                if (m.kind != '?' && m.kind != 'M')
                    syntax_error(ln, tm.col, "expected a map name");
                const Token& tw = need(4, "a weight expression");
                if (tw.text.find('=') != std::string::npos)
                    syntax_error(ln, tw.col, "expected a weight expression (no spaces)");
                s.args = {tm.text, tw.text};
                from = 5;
            }
            parse_check_attrs(s, toks, from, ln, kind.moded);
            doc.statements.push_back({s, pos});
        } else if (head.text == "report") {
            const Token& t1 = need(1, "'errata'");
            if (t1.text != "errata") syntax_error(ln, t1.col, "expected 'errata'");
            expect_end(toks, 2, ln);
            doc.statements.push_back({ReportStmt{"errata"}, pos});
        } else if (head.text == "suite") {
            const Token& t1 = need(1, "a suite name");
            expect_end(toks, 2, ln);
            auto names = suite_names();
            if (std::find(names.begin(), names.end(), t1.text) == names.end())
                syntax_error(ln, t1.col,
                             "unknown suite '" + t1.text + "' (expected one of: " +
                                 join(names, ", ") + ")");
            doc.statements.push_back({SuiteStmt{t1.text}, pos});
        } else {
            syntax_error(ln, head.col,
                         "unknown statement '" + head.text +
                             "' (expected params, use, algebra, bimodule, map, mu, actl, actr, "
                             "let, check, report, or suite)");
        }
    }
    return doc;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

struct RenderVisitor {
    std::string operator()(const ParamsStmt& s) const { return "params " + join(s.names, " "); }
    std::string operator()(const UseStmt& s) const {
        return "use catalog." + s.entry + " as " + s.alias;
    }
    std::string operator()(const AlgebraStmt& s) const {
        return "algebra " + s.name + " dim " + std::to_string(s.dim);
    }
    std::string operator()(const BimoduleStmt& s) const {
        return "bimodule " + s.name + " over " + s.host + " dim " + std::to_string(s.dim);
    }
    std::string operator()(const MapStmt& s) const {
        std::vector<std::string> cols;
        for (const auto& col : s.columns) cols.push_back("[" + join(col, ", ") + "]");
        return "map " + s.owner + "." + s.slot + " = [" + join(cols, ", ") + "]";
    }
    std::string operator()(const MuStmt& s) const {
        return "mu " + s.owner + " e" + std::to_string(s.i + 1) + " e" + std::to_string(s.j + 1) +
               " = " + s.rhs;
    }
    std::string operator()(const ActStmt& s) const {
        std::string e = "e" + std::to_string(s.algebra_index + 1);
        std::string v = "v" + std::to_string(s.module_index + 1);
        if (s.left) return "actl " + s.owner + " " + e + " " + v + " = " + s.rhs;
        return "actr " + s.owner + " " + v + " " + e + " = " + s.rhs;
    }
    std::string operator()(const LetStmt& s) const {
        return "let " + s.name + " = " + s.fn + "(" + join(s.args, ", ") + ")";
    }
    std::string operator()(const CheckStmt& s) const {
        std::string out = "check " + s.target + " " + s.kind;
        for (const auto& a : s.args) out += " " + a;
        if (s.mode) out += " mode=" + *s.mode;
        if (s.points) out += " points=" + std::to_string(*s.points);
        if (s.seed) out += " seed=" + std::to_string(*s.seed);
        if (s.expect_written) out += std::string(" expect=") + (s.expect_pass ? "pass" : "fail");
        return out;
    }
    std::string operator()(const ReportStmt& s) const { return "report " + s.what; }
    std::string operator()(const SuiteStmt& s) const { return "suite " + s.name; }
};

}  // namespace

std::string render(const Statement& statement) { return std::visit(RenderVisitor{}, statement.body); }

std::string render(const Document& doc) {
    std::string out;
    for (const Statement& st : doc.statements) {
        out += render(st);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

namespace {

using Value = std::variant<AlgebraPtr, BimodulePtr, LinearMap>;

struct AlgebraBuilder {
    std::size_t dim = 0;
    SourcePos pos;
    std::vector<std::string> rhs;       // dim*dim raw products, "" = unset
    std::vector<std::size_t> rhs_line;  // line of each mu statement
    const MapStmt* alpha = nullptr;
    const MapStmt* beta = nullptr;
    std::size_t alpha_line = 0, beta_line = 0;
    bool finalized = false;
};

struct BimoduleBuilder {
    std::string host;
    std::size_t mdim = 0;
    SourcePos pos;
    struct Act {
        std::size_t i = 0, p = 0;
        std::string rhs;
        std::size_t line = 0;
    };
    std::vector<Act> left, right;
    const MapStmt* phi = nullptr;
    const MapStmt* psi = nullptr;
    std::size_t phi_line = 0, psi_line = 0;
    bool finalized = false;
};

struct Env {
    ContextPtr ctx;
    std::map<std::string, Value> values;
    std::map<std::string, AlgebraBuilder> algebras;
    std::map<std::string, BimoduleBuilder> bimodules;
};

[[noreturn]] void rethrow_here(const Error& e, std::size_t line) {
    std::string what = e.what();
    std::string body = what.size() > e.kind().size() + 2 ? what.substr(e.kind().size() + 2) : what;
    if (body.rfind("line ", 0) == 0) throw Error(e.kind(), body);  // already located
    throw Error(e.kind(), "line " + std::to_string(line) + ": " + body);
}

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        rethrow_here(e, line);
    }
}

Vec eval_combination(const ContextPtr& ctx, const std::string& text, char prefix, std::size_t dim,
                     std::size_t line) {
    Vec v = zero_vec(ctx, dim);
    for (const RawTerm& t : split_terms(text, prefix, dim, line, 1)) {
        Scalar c = t.coeff.empty() ? Scalar(ctx, 1L) : at_line(line, [&] {
            return parse_scalar(ctx, t.coeff);
        });
        if (t.negative) c = -c;
        if (t.basis) {
            v[*t.basis] = v[*t.basis] + c;
        } else if (!(c == Scalar(ctx))) {
            throw Error("SyntaxError", "line " + std::to_string(line) + ": term '" + t.coeff +
                                           "' has no basis element and is not zero");
        }
    }
    return v;
}

LinearMap build_map(const ContextPtr& ctx, const MapStmt& s, std::size_t rows, std::size_t line) {
    std::vector<Vec> cols;
    for (const auto& col : s.columns) {
        Vec v;
        v.reserve(col.size());
        for (const std::string& entry : col)
            v.push_back(at_line(line, [&] { return parse_scalar(ctx, entry); }));
        cols.push_back(std::move(v));
    }
    return at_line(line, [&] { return LinearMap::from_columns(ctx, rows, cols); });
}

class Runner {
public:
    Runner(const Document& doc, const RunOptions& options) : doc_(doc), options_(options) {
        env_.ctx = make_context({});
        if (options_.mode_override && *options_.mode_override != "linearized" &&
            *options_.mode_override != "symbolic" && *options_.mode_override != "sampled")
            throw Error("InvalidArgument",
                        "mode override must be linearized, symbolic, or sampled");
    }

    RunResult execute() {
        for (const Statement& st : doc_.statements) {
            line_ = st.pos.line;
            std::visit([&](const auto& body) { this->exec(body); }, st.body);
        }
        return finish();
    }

private:
    const Document& doc_;
    RunOptions options_;
    Env env_;
    std::size_t line_ = 0;

    std::vector<std::string> text_;
    json directives_ = json::array();
    std::size_t checks_total_ = 0, checks_ok_ = 0;
    bool success_ = true;

    struct MapRecord {
        std::string owner, slot;
        std::size_t line;
    };
    std::vector<MapRecord> map_records_;
    std::set<std::string> used_owners_;

    // ---- value management -------------------------------------------------

    void bind_value(const std::string& name, Value v) {
        if (env_.values.count(name) || env_.algebras.count(name) || env_.bimodules.count(name))
            throw Error("RedefinedName",
                        "line " + std::to_string(line_) + ": name '" + name + "' is already bound");
        env_.values.emplace(name, std::move(v));
    }

    Value& resolve(const std::string& name) {
        auto vit = env_.values.find(name);
        if (vit != env_.values.end()) return vit->second;
        auto ait = env_.algebras.find(name);
        if (ait != env_.algebras.end()) return finalize_algebra(name, ait->second);
        auto bit = env_.bimodules.find(name);
        if (bit != env_.bimodules.end()) return finalize_bimodule(name, bit->second);
        throw Error("UnknownIdentifier",
                    "line " + std::to_string(line_) + ": name '" + name + "' is not defined");
    }

    AlgebraPtr need_algebra(const std::string& name) {
        Value& v = resolve(name);
        if (auto* p = std::get_if<AlgebraPtr>(&v)) return *p;
        throw Error("InvalidArgument",
                    "line " + std::to_string(line_) + ": '" + name + "' is not an algebra");
    }

    BimodulePtr need_bimodule(const std::string& name) {
        Value& v = resolve(name);
        if (auto* p = std::get_if<BimodulePtr>(&v)) return *p;
        throw Error("InvalidArgument",
                    "line " + std::to_string(line_) + ": '" + name + "' is not a bimodule");
    }

    LinearMap need_map(const std::string& name) {
        Value& v = resolve(name);
        if (auto* p = std::get_if<LinearMap>(&v)) return *p;
        throw Error("InvalidArgument",
                    "line " + std::to_string(line_) + ": '" + name + "' is not a map");
    }

    // Host dimension without forcing finalization.
    std::size_t host_dim_of(const std::string& name) {
        auto vit = env_.values.find(name);
        if (vit != env_.values.end()) {
            if (auto* p = std::get_if<AlgebraPtr>(&vit->second)) return (*p)->dim();
            throw Error("InvalidArgument",
                        "line " + std::to_string(line_) + ": '" + name + "' is not an algebra");
        }
        auto ait = env_.algebras.find(name);
        if (ait != env_.algebras.end()) return ait->second.dim;
        throw Error("UnknownIdentifier",
                    "line " + std::to_string(line_) + ": name '" + name + "' is not defined");
    }

    Value& finalize_algebra(const std::string& name, AlgebraBuilder& b) {
        const std::size_t n = b.dim;
        std::vector<Scalar> mu(n * n * n, Scalar(env_.ctx));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::string& rhs = b.rhs[i * n + j];
                if (rhs.empty()) continue;
                Vec v = eval_combination(env_.ctx, rhs, 'e', n, b.rhs_line[i * n + j]);
                for (std::size_t k = 0; k < n; ++k) mu[(i * n + j) * n + k] = v[k];
            }
        LinearMap alpha = b.alpha ? build_map(env_.ctx, *b.alpha, n, b.alpha_line)
                                  : LinearMap::identity(env_.ctx, n);
        LinearMap beta = b.beta ? build_map(env_.ctx, *b.beta, n, b.beta_line)
                                : LinearMap::identity(env_.ctx, n);
        AlgebraPtr A = at_line(b.pos.line, [&] {
            return BiHomAlgebra::make(name, env_.ctx, n, std::move(mu), std::move(alpha),
                                      std::move(beta));
        });
        b.finalized = true;
        used_owners_.insert(name);
        return env_.values.emplace(name, std::move(A)).first->second;
    }

    Value& finalize_bimodule(const std::string& name, BimoduleBuilder& b) {
        AlgebraPtr host = need_algebra(b.host);
        const std::size_t n = host->dim();
        const std::size_t m = b.mdim;
        std::vector<Scalar> rho_l(n * m * m, Scalar(env_.ctx));
        std::vector<Scalar> rho_r(m * n * m, Scalar(env_.ctx));
        for (const auto& a : b.left) {
            if (a.i >= n)
                throw Error("UnknownIdentifier",
                            "line " + std::to_string(a.line) + ": basis element e" +
                                std::to_string(a.i + 1) + " is not defined (host dimension is " +
                                std::to_string(n) + ")");
            Vec v = eval_combination(env_.ctx, a.rhs, 'v', m, a.line);
            for (std::size_t q = 0; q < m; ++q) rho_l[(a.i * m + a.p) * m + q] = v[q];
        }
        for (const auto& a : b.right) {
            if (a.i >= n)
                throw Error("UnknownIdentifier",
                            "line " + std::to_string(a.line) + ": basis element e" +
                                std::to_string(a.i + 1) + " is not defined (host dimension is " +
                                std::to_string(n) + ")");
            Vec v = eval_combination(env_.ctx, a.rhs, 'v', m, a.line);
            for (std::size_t q = 0; q < m; ++q) rho_r[(a.p * n + a.i) * m + q] = v[q];
        }
        LinearMap phi = b.phi ? build_map(env_.ctx, *b.phi, m, b.phi_line)
                              : LinearMap::identity(env_.ctx, m);
        LinearMap psi = b.psi ? build_map(env_.ctx, *b.psi, m, b.psi_line)
                              : LinearMap::identity(env_.ctx, m);
        BimodulePtr V = at_line(b.pos.line, [&] {
            return BiHomBimodule::make(name, host, m, std::move(phi), std::move(psi),
                                       std::move(rho_l), std::move(rho_r));
        });
        b.finalized = true;
        used_owners_.insert(name);
        return env_.values.emplace(name, std::move(V)).first->second;
    }

    // ---- digests and summaries --------------------------------------------

    static std::uint64_t fnv1a64(const std::string& bytes) {
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    static std::string hex16(std::uint64_t v) {
        static const char* digits = "0123456789abcdef";
        std::string out(16, '0');
        for (int i = 15; i >= 0; --i) {
            out[i] = digits[v & 0xf];
            v >>= 4;
        }
        return out;
    }

    static std::string digest_of(const std::string& bytes) { return "fnv1a64:" + hex16(fnv1a64(bytes)); }

    static std::string algebra_digest(const AlgebraPtr& A) {
        std::string bytes = "algebra|" + std::to_string(A->dim()) + "|";
        for (const Scalar& s : A->mu_tensor()) {
            bytes += s.str();
            bytes += ';';
        }
        bytes += A->alpha().str();
        bytes += '|';
        bytes += A->beta().str();
        return digest_of(bytes);
    }

    static std::string bimodule_digest(const BimodulePtr& V) {
        std::string bytes =
            "bimodule|" + std::to_string(V->adim()) + "x" + std::to_string(V->mdim()) + "|";
        for (const Scalar& s : V->rho_l()) {
            bytes += s.str();
            bytes += ';';
        }
        bytes += '|';
        for (const Scalar& s : V->rho_r()) {
            bytes += s.str();
            bytes += ';';
        }
        bytes += V->phi().str();
        bytes += '|';
        bytes += V->psi().str();
        bytes += '|';
        bytes += algebra_digest(V->host());
        return digest_of(bytes);
    }

    static std::string map_digest(const LinearMap& f) { return digest_of("map|" + f.str()); }

    // Text summary + structured summary of a bound value.
    std::pair<std::string, json> summarize(const Value& v) {
        if (const auto* a = std::get_if<AlgebraPtr>(&v)) {
            const AlgebraPtr& A = *a;
            std::string d = algebra_digest(A);
            json j = {{"kind", "algebra"},
                      {"label", A->label()},
                      {"dim", A->dim()},
                      {"digest", d}};
            return {"algebra \"" + A->label() + "\", dim " + std::to_string(A->dim()) +
                        ", digest " + d,
                    j};
        }
        if (const auto* b = std::get_if<BimodulePtr>(&v)) {
            const BimodulePtr& V = *b;
            std::string d = bimodule_digest(V);
            json j = {{"kind", "bimodule"}, {"label", V->label()},
                      {"host", V->host()->label()}, {"host_dim", V->adim()},
                      {"dim", V->mdim()},  {"digest", d}};
            return {"bimodule \"" + V->label() + "\" over \"" + V->host()->label() +
                        "\", carrier dim " + std::to_string(V->mdim()) + ", digest " + d,
                    j};
        }
        const LinearMap& f = std::get<LinearMap>(v);
        std::string d = map_digest(f);
        json j = {{"kind", "map"}, {"rows", f.rows()}, {"cols", f.cols()}, {"digest", d}};
        return {"map " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + ", digest " + d,
                j};
    }

    // ---- statement execution ----------------------------------------------

    void exec(const ParamsStmt& s) { env_.ctx = make_context(s.names); }

    void exec(const UseStmt& s) {
        Value v = at_line(line_, [&]() -> Value {
            auto it = catalog_table().find(s.entry);
            if (it != catalog_table().end() && it->second.kind == 'M')
                return catalog_map(s.entry, env_.ctx);
            return catalog_algebra(s.entry, env_.ctx);
        });
        bind_value(s.alias, v);
        auto [summary, jval] = summarize(env_.values.at(s.alias));
        text_.push_back("       use catalog." + s.entry + " as " + s.alias + " -> " + summary);
        directives_.push_back(json{{"directive", "use"},
                                   {"line", line_},
                                   {"entry", s.entry},
                                   {"alias", s.alias},
                                   {"value", jval}});
    }

    void exec(const AlgebraStmt& s) {
        AlgebraBuilder b;
        b.dim = s.dim;
        b.pos = {line_, 1};
        b.rhs.assign(s.dim * s.dim, "");
        b.rhs_line.assign(s.dim * s.dim, line_);
        if (env_.values.count(s.name) || env_.algebras.count(s.name) || env_.bimodules.count(s.name))
            throw Error("RedefinedName",
                        "line " + std::to_string(line_) + ": name '" + s.name + "' is already bound");
        env_.algebras.emplace(s.name, std::move(b));
    }

    void exec(const BimoduleStmt& s) {
        if (env_.values.count(s.name) || env_.algebras.count(s.name) || env_.bimodules.count(s.name))
            throw Error("RedefinedName",
                        "line " + std::to_string(line_) + ": name '" + s.name + "' is already bound");
        BimoduleBuilder b;
        b.host = s.host;
        b.mdim = s.dim;
        b.pos = {line_, 1};
        env_.bimodules.emplace(s.name, std::move(b));
    }

    void exec(const MapStmt& s) {
        map_records_.push_back({s.owner, s.slot, line_});
        auto ait = env_.algebras.find(s.owner);
        if (ait != env_.algebras.end()) {
            require_unfinalized(ait->second.finalized, s.owner);
            if (s.slot == "alpha") {
                ait->second.alpha = &s;
                ait->second.alpha_line = line_;
            } else {
                ait->second.beta = &s;
                ait->second.beta_line = line_;
            }
            return;
        }
        auto bit = env_.bimodules.find(s.owner);
        if (bit != env_.bimodules.end()) {
            require_unfinalized(bit->second.finalized, s.owner);
            if (s.slot == "phi") {
                bit->second.phi = &s;
                bit->second.phi_line = line_;
            } else {
                bit->second.psi = &s;
                bit->second.psi_line = line_;
            }
            return;
        }
        throw Error("UnknownIdentifier",
                    "line " + std::to_string(line_) + ": name '" + s.owner + "' is not defined");
    }

    void exec(const MuStmt& s) {
        auto ait = env_.algebras.find(s.owner);
        if (ait == env_.algebras.end())
            throw Error("UnknownIdentifier",
                        "line " + std::to_string(line_) + ": name '" + s.owner + "' is not defined");
        require_unfinalized(ait->second.finalized, s.owner);
        AlgebraBuilder& b = ait->second;
        b.rhs[s.i * b.dim + s.j] = s.rhs;
        b.rhs_line[s.i * b.dim + s.j] = line_;
    }

    void exec(const ActStmt& s) {
        auto bit = env_.bimodules.find(s.owner);
        if (bit == env_.bimodules.end())
            throw Error("UnknownIdentifier",
                        "line " + std::to_string(line_) + ": name '" + s.owner + "' is not defined");
        BimoduleBuilder& b = bit->second;
        require_unfinalized(b.finalized, s.owner);
        const std::size_t n = host_dim_of(b.host);
        if (s.algebra_index >= n)
            throw Error("UnknownIdentifier",
                        "line " + std::to_string(line_) + ": basis element e" +
                            std::to_string(s.algebra_index + 1) +
                            " is not defined (host dimension is " + std::to_string(n) + ")");
        BimoduleBuilder::Act a{s.algebra_index, s.module_index, s.rhs, line_};
        (s.left ? b.left : b.right).push_back(std::move(a));
    }

    void require_unfinalized(bool finalized, const std::string& name) {
        if (finalized)
            throw Error("InvalidArgument", "line " + std::to_string(line_) + ": cannot modify '" +
                                               name + "' after it has been used");
    }

    void exec(const LetStmt& s) {
        Value v = run_let(s);
        bind_value(s.name, std::move(v));
        auto [summary, jval] = summarize(env_.values.at(s.name));
        text_.push_back("       let " + s.name + " = " + s.fn + "(" + join(s.args, ", ") + ") -> " +
                        summary);
        directives_.push_back(json{{"directive", "let"},
                                   {"line", line_},
                                   {"name", s.name},
                                   {"fn", s.fn},
                                   {"args", s.args},
                                   {"value", jval}});
    }

    Value run_let(const LetStmt& s) {
        auto A = [&](std::size_t k) { return need_algebra(s.args[k]); };
        auto B = [&](std::size_t k) { return need_bimodule(s.args[k]); };
        auto M = [&](std::size_t k) { return need_map(s.args[k]); };
        auto I = [&](std::size_t k) { return static_cast<std::size_t>(std::stoull(s.args[k])); };
        const std::string& fn = s.fn;
        return at_line(line_, [&]() -> Value {
            if (fn == "direct_sum") return direct_sum(A(0), A(1));
            if (fn == "tensor_product") return tensor_product(A(0), A(1));
            if (fn == "yau_twist") return yau_twist(A(0), M(1), M(2));
            if (fn == "power_twist") return power_twist(A(0), I(1));
            if (fn == "rota_baxter_deformation") return rota_baxter_deformation(A(0), M(1));
            if (fn == "plus_algebra") return plus_algebra(A(0));
            if (fn == "sne") return split_null_extension(A(0), B(1), s.args[2]);
            if (fn == "regular") return regular_bimodule(A(0));
            if (fn == "shift") return shift_bimodule(B(0), I(1), I(2));
            if (fn == "twist") return twist_bimodule(B(0), M(1), M(2), M(3), M(4));
            if (fn == "twist_powers")
                return twist_bimodule_powers(B(0), I(1), I(2), I(3), I(4), I(5), I(6));
            if (fn == "rb_twist") return rb_twist_bimodule(B(0), M(1));
            if (fn == "jordan_shift") return jordan_shift_bimodule(B(0), I(1));
            if (fn == "jordan_deform") return jordan_deform_bimodule(B(0), M(1), M(2), M(3), M(4));
            if (fn == "jordan_deform_powers")
                return jordan_deform_bimodule_powers(B(0), M(1), M(2), M(3), M(4), I(5));
            if (fn == "rehost") return rehost_bimodule(B(0), A(1));
            if (fn == "automorphism") return catalog_automorphism(s.args[0], A(1));
            throw Error("UnknownTag", "unknown construction '" + fn + "'");
        });
    }

    CheckMode resolve_mode(const CheckStmt& c) const {
        std::string m = c.mode ? *c.mode : options_.mode_override.value_or("linearized");
        if (m == "linearized") return CheckMode::linearized();
        if (m == "symbolic") return CheckMode::symbolic();
        std::size_t pts = c.points.value_or(50);
        std::uint64_t sd = c.seed ? *c.seed : options_.seed_override.value_or(2026);
        return CheckMode::sampled(pts, sd);
    }

    void exec(const CheckStmt& s) {
        const CheckKindInfo& kind = check_kind_table().at(s.kind);
        CheckMode mode = resolve_mode(s);
        CheckReport r = at_line(line_, [&] { return dispatch_check(s, kind, mode); });

        const bool ok = r.pass == s.expect_pass;
        ++checks_total_;
        if (ok)
            ++checks_ok_;
        else
            success_ = false;

        Statement shown{s, {line_, 1}};
        std::string head = std::string(ok ? "[ OK ] " : "[FAIL] ") + render(shown) + " -> " +
                           (r.pass ? "pass" : "fail") + " [" + r.stats.strategy + ", " +
                           std::to_string(r.stats.tuples) + " tuples]";
        text_.push_back(head);
        json jw = json::array();
        for (const Witness& w : r.witnesses) {
            text_.push_back("         witness [" + w.equation + "] at " + w.where() +
                            ": residual " + w.residual);
            jw.push_back(json{{"equation", w.equation},
                              {"tuple", w.tuple},
                              {"location", w.location},
                              {"residual", w.residual}});
        }
        for (const std::string& note : r.notes) text_.push_back("         note: " + note);

        json jd{{"directive", "check"},
                {"line", line_},
                {"target", s.target},
                {"kind", s.kind},
                {"expected", s.expect_pass ? "pass" : "fail"},
                {"verdict", r.pass ? "pass" : "fail"},
                {"ok", ok},
                {"strategy", r.stats.strategy},
                {"tuples", r.stats.tuples},
                {"witnesses", jw},
                {"notes", r.notes}};
        if (!s.args.empty()) jd["args"] = s.args;
        directives_.push_back(std::move(jd));
    }

    CheckReport dispatch_check(const CheckStmt& s, const CheckKindInfo& kind, const CheckMode& mode) {
        if (kind.target == 'a') {
            AlgebraPtr A = need_algebra(s.target);
            if (s.kind == "validate") return validate(*A);
            if (s.kind == "associative") return check_bihom_associative(*A);
            if (s.kind == "commutative") return check_bihom_commutative(*A);
            if (s.kind == "left-alternative") return check_left_alternative(*A, mode);
            if (s.kind == "right-alternative") return check_right_alternative(*A, mode);
            if (s.kind == "jordan") return check_bihom_jordan(*A, mode);
            // rota-baxter
            LinearMap R = need_map(s.args[0]);
            Scalar lambda = parse_scalar(env_.ctx, s.args[1]);
            return check_rota_baxter(*A, R, lambda);
        }
        BimodulePtr V = need_bimodule(s.target);
        if (s.kind == "assoc-bimodule") return check_assoc_bimodule(*V);
        if (s.kind == "alt-bimodule") return check_alt_bimodule(*V, mode);
        if (s.kind == "jordan-bimodule") return check_jordan_bimodule(*V);
        if (s.kind == "left-jordan-module") return check_left_jordan_module(*V, mode);
        if (s.kind == "right-jordan-module") return check_right_jordan_module(*V, mode);
        if (s.kind == "left-special") return check_left_special(*V);
        if (s.kind == "right-special") return check_right_special(*V);
        return check_operator_commutativity(*V->host(), V->mdim(), V->rho_l(), V->rho_r());
    }

    void exec(const ReportStmt& s) {
        std::vector<Erratum> led = at_line(line_, [&] { return erratum_ledger(env_.ctx); });
        std::string block = at_line(line_, [&] { return erratum_report(env_.ctx); });
        text_.push_back("       report " + s.what + " -> " + std::to_string(led.size()) +
                        " entries");
        std::size_t bstart = 0;
        while (bstart < block.size()) {
            std::size_t bnl = block.find('\n', bstart);
            std::string bline =
                bnl == std::string::npos ? block.substr(bstart) : block.substr(bstart, bnl - bstart);
            bstart = bnl == std::string::npos ? block.size() : bnl + 1;
            if (!bline.empty()) text_.push_back("         " + bline);
        }
        json entries = json::array();
        for (const Erratum& e : led)
            entries.push_back(json{{"subject", e.subject},
                                   {"entry", e.entry},
                                   {"transcribed", vec_str(e.transcribed)},
                                   {"recomputed", vec_str(e.recomputed)},
                                   {"note", e.note}});
        directives_.push_back(json{{"directive", "report"},
                                   {"line", line_},
                                   {"what", s.what},
                                   {"entries", entries}});
    }

    void exec(const SuiteStmt& s) {
        SuiteResult res = at_line(line_, [&] { return run_suite(s.name, env_.ctx); });
        ++checks_total_;
        if (res.pass)
            ++checks_ok_;
        else
            success_ = false;
        text_.push_back(std::string(res.pass ? "[ OK ] " : "[FAIL] ") + "suite " + s.name + " -> " +
                        (res.pass ? "pass" : "fail") + " (" + std::to_string(res.lines.size()) +
                        " lines)");
        json lines = json::array();
        for (const SuiteLine& l : res.lines) {
            text_.push_back(std::string("         ") + (l.pass ? "ok   " : "FAIL ") + l.text);
            lines.push_back(json{{"ok", l.pass}, {"text", l.text}});
        }
        directives_.push_back(json{{"directive", "suite"},
                                   {"line", line_},
                                   {"name", s.name},
                                   {"ok", res.pass},
                                   {"lines", lines}});
    }

    RunResult finish() {
        std::vector<std::string> warnings;
        for (const MapRecord& rec : map_records_)
            if (!used_owners_.count(rec.owner))
                warnings.push_back("line " + std::to_string(rec.line) + ": map " + rec.owner + "." +
                                   rec.slot + " is written but never used");
        for (const std::string& w : warnings) text_.push_back("warning: " + w);
        text_.push_back("checks: " + std::to_string(checks_total_) + " total, " +
                        std::to_string(checks_ok_) + " ok, " +
                        std::to_string(checks_total_ - checks_ok_) + " mismatched");
        text_.push_back(std::string("status: ") + (success_ ? "success" : "failure"));

        RunResult out;
        out.success = success_;
        for (const std::string& l : text_) {
            out.text += l;
            out.text += '\n';
        }
        json top{{"directives", directives_},
                 {"checks",
                  json{{"total", checks_total_},
                       {"ok", checks_ok_},
                       {"mismatched", checks_total_ - checks_ok_}}},
                 {"status", success_ ? "success" : "failure"},
                 {"warnings", warnings}};
        out.structured = top.dump(2) + "\n";
        return out;
    }
};

}  // namespace

RunResult run(const Document& doc, const RunOptions& options) {
    Runner runner(doc, options);
    return runner.execute();
}

RunResult run_source(const std::string& source, const RunOptions& options) {
    return run(parse(source), options);
}

const std::string& builtin_replication_document() {
    static const std::string doc = R"DOC(# Built-in replication document: parametric families, octonions, symmetrized
# products, operator deformations, bimodule construction chains, implication
# suites, and the erratum ledger.
params a b

# 2-dimensional parametric family with exact symbolic coefficients
use catalog.e1.first as A1
check A1 validate
check A1 associative
check A1 left-alternative
check A1 right-alternative

# 4-dimensional direct sum of the two parametric families
use catalog.e1.second as A2
let SUM = direct_sum(A1, A2)
check SUM left-alternative
check SUM right-alternative

# octonions: alternative but not associative; twisting preserves alternativity
use catalog.octonions as O
check O left-alternative
check O right-alternative
check O associative expect=fail
let s = automorphism(flip, O)
let OY = yau_twist(O, s, s)
check OY left-alternative
check OY right-alternative

# symmetrized product of the regular parametric family
use catalog.e5 as E
let EP = plus_algebra(E)
check EP commutative
check EP jordan
report errata

# strategy agreement: linearized vs symbolic vs sampled across the catalog
suite polarization

# weight-zero operator identity and the deformations it induces
use catalog.rb_toy as T
use catalog.rb_toy.op as R
let I = automorphism(id, T)
check T rota-baxter R 0
check T rota-baxter I -1
let TD = rota_baxter_deformation(T, R)
check TD left-alternative
check TD right-alternative
let TV = regular(T)
let TW = rb_twist(TV, R)
check TW alt-bimodule

# alternative bimodule chain: regular, shifts, twists, extension, quotient
suite sne-alternative

# Jordan bimodule chain: regular, shifts, deformations, extension, quotient
suite sne-jordan

# implications: special modules, operator commutativity, symmetrized actions
suite implications
suite graph-morphism
)DOC";
    return doc;
}

}  // namespace bihom::dsl
