#include "bihom/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace bihom {

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char ch : s) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    }
    return true;
}

// mpq_class built from a numerator/denominator pair is not reduced automatically,
// and GMP comparisons assume lowest terms, so every externally supplied rational
// passes through here before it is stored or evaluated.
Rational canonical(const Rational& value) {
    if (value.get_den() == 0) throw Error("DivisionByZero", "rational with zero denominator");
    Rational c = value;
    c.canonicalize();
    return c;
}

Rational rational_pow(const Rational& base, std::uint32_t e) {
    if (e == 0) return Rational(1);
    if (e == 1) return base;
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // base is canonical, so num^e/den^e already is
}

}  // namespace

ParameterContext::ParameterContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i]))
            throw Error("InvalidArgument", "parameter name '" + names_[i] + "' is not an identifier");
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j])
                throw Error("InvalidArgument", "duplicate parameter name '" + names_[i] + "'");
        }
    }
}

std::optional<std::size_t> ParameterContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const ParameterContext>(std::move(names));
}

const ContextPtr& rational_context() {
    static const ContextPtr ctx = make_context({});
    return ctx;
}

ContextPtr extend_context(const ContextPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> names = base->names();
    names.insert(names.end(), extra.begin(), extra.end());
    return make_context(std::move(names));
}

bool same_context(const ContextPtr& x, const ContextPtr& y) {
    if (x == y) return true;
    if (!x || !y) return false;
    return *x == *y;
}

void require_same_context(const ContextPtr& x, const ContextPtr& y) {
    if (!same_context(x, y)) {
        std::string lhs = x ? std::to_string(x->size()) + " parameter(s)" : "none";
        std::string rhs = y ? std::to_string(y->size()) + " parameter(s)" : "none";
        throw Error("ContextMismatch", "operands live over different parameter contexts (" + lhs + " vs " + rhs + ")");
    }
}

Polynomial::Polynomial(ContextPtr context) : context_(std::move(context)) {
    if (!context_) throw Error("InvalidArgument", "polynomial requires a parameter context");
}

Polynomial::Polynomial(ContextPtr context, const Rational& constant) : Polynomial(std::move(context)) {
    Rational c = canonical(constant);
    if (c != 0) terms_.emplace(Exponents(context_->size(), 0), std::move(c));
}

Polynomial Polynomial::parameter(ContextPtr context, std::size_t index) {
    Polynomial p(std::move(context));
    if (index >= p.context_->size())
        throw Error("InvalidArgument", "parameter index out of range");
    Exponents e(p.context_->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
    Exponents zero(context_->size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
    if (exps.size() != context_->size())
        throw Error("InvalidArgument", "exponent vector length does not match the context");
    Rational c = canonical(coeff);
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_context(context_, other.context_);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    require_same_context(context_, other.context_);
    Polynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, Rational(-c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_context(context_, other.context_);
    Polynomial out(context_);
    const std::size_t n = context_->size();
    Exponents sum(n, 0);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            for (std::size_t i = 0; i < n; ++i) sum[i] = e1[i] + e2[i];
            out.add_term(sum, Rational(c1 * c2));
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
    require_same_context(context_, other.context_);
    return terms_ == other.terms_;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
    if (point.size() != context_->size())
        throw Error("InvalidArgument", "evaluation point length does not match the context");
    std::vector<Rational> pt;
    pt.reserve(point.size());
    for (const Rational& v : point) pt.push_back(canonical(v));
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) term *= rational_pow(pt[i], e[i]);
        }
        total += term;
    }
    return total;
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t best = 0;
    for (const auto& [e, c] : terms_) {
        std::uint64_t d = 0;
        for (std::uint32_t x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

void Polynomial::scale(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return;
    }
    for (auto& [e, c] : terms_) c *= factor;
}

void Polynomial::shift_down(const Exponents& amounts) {
    Terms shifted;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        for (std::size_t i = 0; i < ne.size(); ++i) {
            if (ne[i] < amounts[i])
                throw Error("InvalidArgument", "monomial shift below zero exponent");
            ne[i] -= amounts[i];
        }
        shifted.emplace(std::move(ne), c);
    }
    terms_ = std::move(shifted);
}

Polynomial Polynomial::embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const {
    if (where.size() != context_->size())
        throw Error("InvalidArgument", "embedding map length does not match the context");
    Polynomial out(bigger);
    for (const auto& [e, c] : terms_) {
        Exponents ne(bigger->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (where[i] >= ne.size())
                throw Error("InvalidArgument", "embedding target index out of range");
            ne[where[i]] = e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& exps = it->first;
        const Rational& coeff = it->second;
        const bool negative = coeff < 0;
        Rational mag = negative ? Rational(-coeff) : coeff;
        std::string vars;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += context_->name(i);
            if (exps[i] > 1) vars += "^" + std::to_string(exps[i]);
        }
        std::string body;
        if (vars.empty()) {
            body = mag.get_str();
        } else if (mag == 1) {
            body = vars;
        } else {
            body = mag.get_str() + "*" + vars;
        }
        if (first) {
            if (negative) out += "-";
            out += body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

Scalar::Scalar(ContextPtr context) : num_(context), den_(context, Rational(1)) {}

Scalar::Scalar(ContextPtr context, const Rational& value)
    : num_(context, value), den_(context, Rational(1)) {
    normalize();
}

Scalar::Scalar(ContextPtr context, long value) : Scalar(std::move(context), Rational(value)) {}

Scalar::Scalar(Polynomial num) : num_(std::move(num)), den_(num_.context(), Rational(1)) {
    normalize();
}

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Scalar Scalar::parameter(ContextPtr context, std::size_t index) {
    return Scalar(Polynomial::parameter(std::move(context), index));
}

void Scalar::normalize() {
    require_same_context(num_.context(), den_.context());
    if (den_.is_zero()) throw Error("DivisionByZero", "denominator is the zero polynomial");
    const ContextPtr& ctx = num_.context();
    if (num_.is_zero()) {
        den_ = Polynomial(ctx, Rational(1));
        return;
    }
    // Joint integer content: with every coefficient in lowest terms, scaling
    // all of them by lcm(denominators)/gcd(numerators) yields coprime integer
    // coefficients across numerator and denominator together.
    mpz_class g(0), l(1);
    auto absorb = [&](const Polynomial& p) {
        for (const auto& [e, c] : p.terms()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        }
    };
    absorb(num_);
    absorb(den_);
    Rational factor(l, g);
    factor.canonicalize();
    if (factor != 1) {
        num_.scale(factor);
        den_.scale(factor);
    }
    // Common monomial factor.
    const std::size_t np = ctx->size();
    if (np > 0) {
        Polynomial::Exponents mins(np, std::numeric_limits<std::uint32_t>::max());
        auto take_min = [&](const Polynomial& p) {
            for (const auto& [e, c] : p.terms()) {
                for (std::size_t i = 0; i < np; ++i) mins[i] = std::min(mins[i], e[i]);
            }
        };
        take_min(num_);
        take_min(den_);
        if (std::any_of(mins.begin(), mins.end(), [](std::uint32_t m) { return m != 0; })) {
            num_.shift_down(mins);
            den_.shift_down(mins);
        }
    }
    // Equal (up to sign) numerator and denominator collapse to +/-1 even though
    // no general polynomial factor is ever extracted.
    if (num_ == den_) {
        num_ = Polynomial(ctx, Rational(1));
        den_ = num_;
    } else if (num_ == -den_) {
        num_ = Polynomial(ctx, Rational(-1));
        den_ = Polynomial(ctx, Rational(1));
    }
    if (den_.leading_coefficient() < 0) {
        num_.scale(Rational(-1));
        den_.scale(Rational(-1));
    }
}

bool Scalar::is_one() const { return num_ == den_; }

bool Scalar::is_rational() const { return num_.is_constant() && den_.is_constant(); }

Rational Scalar::rational_value() const {
    if (!is_rational())
        throw Error("InvalidArgument", "scalar is not a plain rational: " + str());
    Rational v = num_.constant_value() / den_.constant_value();
    return v;
}

Scalar Scalar::operator+(const Scalar& other) const {
    require_same_context(context(), other.context());
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    if (den_ == other.den_) return Scalar(num_ + other.num_, den_);
    return Scalar(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator-(const Scalar& other) const {
    require_same_context(context(), other.context());
    if (other.is_zero()) return *this;
    if (den_ == other.den_) return Scalar(num_ - other.num_, den_);
    return Scalar(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

Scalar Scalar::operator*(const Scalar& other) const {
    require_same_context(context(), other.context());
    if (is_zero()) return *this;
    if (other.is_zero()) return other;
    // Cancel factors that match whole numerators/denominators exactly; this is
    // the only cross-cancellation available without polynomial gcd.
    const bool xy = num_ == other.den_;
    const bool yx = other.num_ == den_;
    if (xy && yx) return Scalar(Polynomial(context(), Rational(1)));
    if (xy) return Scalar(other.num_, den_);
    if (yx) return Scalar(num_, other.den_);
    return Scalar(num_ * other.num_, den_ * other.den_);
}

Scalar Scalar::operator/(const Scalar& other) const {
    require_same_context(context(), other.context());
    if (other.is_zero()) throw Error("DivisionByZero", "division by the zero scalar");
    if (den_ == other.den_) return Scalar(num_, other.num_);
    if (num_ == other.num_) return Scalar(other.den_, den_);
    return Scalar(num_ * other.den_, den_ * other.num_);
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.num_ = -out.num_;
    return out;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of the zero scalar");
    return Scalar(den_, num_);
}

bool Scalar::operator==(const Scalar& other) const {
    require_same_context(context(), other.context());
    if (den_ == other.den_) return num_ == other.num_;
    return num_ * other.den_ == other.num_ * den_;
}

Rational Scalar::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) throw Error("PoleAtPoint", "denominator " + den_.str() + " vanishes at the point");
    return num_.eval(point) / d;
}

Scalar Scalar::embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const {
    return Scalar(num_.embed(bigger, where), den_.embed(bigger, where));
}

std::string Scalar::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Scalar scalar_arith(ArithOp op, const Scalar& x, const Scalar* y) {
    auto need_y = [&]() -> const Scalar& {
        if (!y) throw Error("InvalidArgument", "binary scalar operation requires two operands");
        return *y;
    };
    switch (op) {
        case ArithOp::Add: return x + need_y();
        case ArithOp::Sub: return x - need_y();
        case ArithOp::Mul: return x * need_y();
        case ArithOp::Div: return x / need_y();
        case ArithOp::Neg: return -x;
        case ArithOp::Inv: return x.inv();
    }
    throw Error("InvalidArgument", "unknown scalar operation");
}

bool scalar_eq(const Scalar& x, const Scalar& y) { return x == y; }

Rational scalar_eval(const Scalar& x, const std::map<std::string, Rational>& point) {
    const ContextPtr& ctx = x.context();
    std::vector<Rational> values;
    values.reserve(ctx->size());
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        auto it = point.find(ctx->name(i));
        if (it == point.end())
            throw Error("InvalidArgument", "evaluation point does not bind parameter '" + ctx->name(i) + "'");
        values.push_back(it->second);
    }
    return x.eval(values);
}

namespace {

// Scalar literal parser: a little recursive-descent evaluator over the token
// stream.  Kept free of the definition-language parser so that scalar
// literals behave identically everywhere they appear.
struct ScalarLexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
};

class ScalarParser {
public:
    ScalarParser(const ContextPtr& context, const std::string& text) : ctx_(context), lex_{text} {}

    Scalar parse() {
        Scalar value = expression();
        if (!lex_.done()) fail("end of literal");
        return value;
    }

private:
    ContextPtr ctx_;
    ScalarLexer lex_;

    [[noreturn]] void fail(const std::string& expected) {
        throw Error("SyntaxError", "scalar literal: expected " + expected + " at column " +
                                       std::to_string(lex_.pos + 1) + " of '" + lex_.text + "'");
    }

    bool starts_primary(char ch) {
        return std::isdigit(static_cast<unsigned char>(ch)) ||
               std::isalpha(static_cast<unsigned char>(ch)) || ch == '(';
    }

    Scalar expression() {
        Scalar value = term();
        while (true) {
            char ch = lex_.peek();
            if (ch == '+' || ch == '-') {
                ++lex_.pos;
                Scalar rhs = term();
                value = (ch == '+') ? value + rhs : value - rhs;
            } else {
                return value;
            }
        }
    }

    Scalar term() {
        Scalar value = unary();
        while (true) {
            char ch = lex_.peek();
            if (ch == '*' || ch == '/') {
                ++lex_.pos;
                Scalar rhs = unary();
                value = (ch == '*') ? value * rhs : value / rhs;
            } else if (starts_primary(ch)) {
                value = value * unary();  // juxtaposition, e.g. "2a"
            } else {
                return value;
            }
        }
    }

    Scalar unary() {
        bool negate = false;
        while (true) {
            char ch = lex_.peek();
            if (ch == '-') {
                negate = !negate;
                ++lex_.pos;
            } else if (ch == '+') {
                ++lex_.pos;
            } else {
                break;
            }
        }
        Scalar value = power();
        return negate ? -value : value;
    }

    Scalar power() {
        Scalar base = primary();
        if (lex_.peek() == '^') {
            ++lex_.pos;
            std::uint32_t e = exponent();
            Scalar out(ctx_, 1L);
            for (std::uint32_t i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    std::uint32_t exponent() {
        if (!std::isdigit(static_cast<unsigned char>(lex_.peek()))) fail("a nonnegative integer exponent");
        std::uint64_t value = 0;
        while (lex_.pos < lex_.text.size() && std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(lex_.text[lex_.pos] - '0');
            if (value > 1000) fail("an exponent at most 1000");
            ++lex_.pos;
        }
        return static_cast<std::uint32_t>(value);
    }

    Scalar primary() {
        char ch = lex_.peek();
        if (ch == '(') {
            ++lex_.pos;
            Scalar inner = expression();
            if (lex_.peek() != ')') fail("')'");
            ++lex_.pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (lex_.pos < lex_.text.size() && std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
                digits += lex_.text[lex_.pos++];
            }
            return Scalar(ctx_, Rational(mpz_class(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name;
            while (lex_.pos < lex_.text.size()) {
                char c = lex_.text[lex_.pos];
                if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                    name += c;
                    ++lex_.pos;
                } else {
                    break;
                }
            }
            auto index = ctx_->index_of(name);
            if (!index) throw Error("UnknownIdentifier", "unknown parameter '" + name + "' in scalar literal");
            return Scalar::parameter(ctx_, *index);
        }
        fail("a number, parameter, or '('");
    }
};

}  // namespace

Scalar parse_scalar(const ContextPtr& context, const std::string& text) {
    return ScalarParser(context, text).parse();
}

}  // namespace bihom
