#pragma once

// Exact scalar arithmetic for structure constants: arbitrary-precision
// rationals and rational functions in named parameters.
//
// A Scalar is a quotient num/den of multivariate polynomials with rational
// coefficients over a shared ParameterContext.  Normalization keeps one
// canonical representative per (num, den) pair without any multivariate gcd:
//   * the integer content of numerator and denominator, taken jointly, is 1,
//   * no parameter divides every monomial of both numerator and denominator,
//   * the lexicographically leading coefficient of the denominator is positive.
// Two Scalars may still denote the same function through a common polynomial
// factor, so equality is decided by cross-multiplication, which is exact.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bihom/error.hpp"

namespace bihom {

using Rational = mpq_class;

// Ordered list of distinct parameter names, e.g. {"a", "b"}.  Shared by
// every value of one algebraic universe; all arithmetic demands matching
// contexts (same pointer or equal name lists).
class ParameterContext {
public:
    explicit ParameterContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const ParameterContext& other) const {
        return names_ == other.names_;
    }

private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const ParameterContext>;

// Context with the given parameter names (validated).
ContextPtr make_context(std::vector<std::string> names);
// The shared parameter-free context of the plain rationals.
const ContextPtr& rational_context();
// Context of base's names followed by extra fresh names.
ContextPtr extend_context(const ContextPtr& base, const std::vector<std::string>& extra);

bool same_context(const ContextPtr& x, const ContextPtr& y);
// Throws ContextMismatch unless same_context(x, y).
void require_same_context(const ContextPtr& x, const ContextPtr& y);

// Multivariate polynomial over the rationals.  Terms are keyed by exponent
// vectors (one entry per context parameter) in lexicographic order; no zero
// coefficient is ever stored, so term-by-term comparison decides equality.
class Polynomial {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Terms = std::map<Exponents, Rational>;

    explicit Polynomial(ContextPtr context);                    // zero
    Polynomial(ContextPtr context, const Rational& constant);
    static Polynomial parameter(ContextPtr context, std::size_t index);

    const ContextPtr& context() const { return context_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the constant monomial (0 when absent).
    Rational constant_value() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Rational eval(const std::vector<Rational>& point) const;

    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;
    // Coefficient of the lexicographically greatest monomial; zero polynomial
    // yields 0.
    Rational leading_coefficient() const;

    // Adds coeff * (monomial with the given exponents); drops the term when
    // the sum cancels.  The builder used by parsing and arithmetic.
    void add_term(const Exponents& exps, const Rational& coeff);

    // In-place normalization helpers used by Scalar.
    void scale(const Rational& factor);           // multiply all coefficients
    void shift_down(const Exponents& amounts);    // divide by a common monomial

    // The same polynomial over a context with more parameters; where[i] is
    // the position of parameter i inside the bigger context.
    Polynomial embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const;

    std::string str() const;

private:
    ContextPtr context_;
    Terms terms_;
};

// Normalized quotient of polynomials; the exact field element type of the
// whole library.
class Scalar {
public:
    explicit Scalar(ContextPtr context);                    // zero
    Scalar(ContextPtr context, const Rational& value);
    Scalar(ContextPtr context, long value);
    explicit Scalar(Polynomial num);
    Scalar(Polynomial num, Polynomial den);
    static Scalar parameter(ContextPtr context, std::size_t index);

    const ContextPtr& context() const { return num_.context(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const;        // constant numerator and denominator
    Rational rational_value() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator*(const Scalar& other) const;
    Scalar operator/(const Scalar& other) const;    // DivisionByZero
    Scalar operator-() const;
    Scalar inv() const;                             // DivisionByZero
    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }

    // Cross-multiplication equality: num(x)*den(y) == num(y)*den(x).
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    // Exact value at a point given by one rational per context parameter.
    Rational eval(const std::vector<Rational>& point) const;   // PoleAtPoint

    Scalar embed(const ContextPtr& bigger, const std::vector<std::size_t>& where) const;

    std::string str() const;

private:
    Polynomial num_, den_;
    void normalize();
};

enum class ArithOp { Add, Sub, Mul, Div, Neg, Inv };

// Uniform entry point mirroring the operator set; y is ignored for Neg/Inv.
Scalar scalar_arith(ArithOp op, const Scalar& x, const Scalar* y = nullptr);
bool scalar_eq(const Scalar& x, const Scalar& y);
// Value at a point given as name -> rational; every parameter must be bound.
Rational scalar_eval(const Scalar& x, const std::map<std::string, Rational>& point);

// Parses the scalar literal grammar of the definition language: integers,
// parameter names, + - * / ( ) ^ with nonnegative integer exponents, and
// juxtaposition as multiplication (e.g. "2a").  Column numbers in errors are
// 1-based offsets into `text`.
Scalar parse_scalar(const ContextPtr& context, const std::string& text);

}  // namespace bihom
