#pragma once

#include "interlace/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace interlace {

using VarIndex = std::uint32_t;

// Product of variables x_v^e with v >= 1 and e >= 1, stored sorted by variable.
class Monomial {
public:
    using Factor = std::pair<VarIndex, std::uint32_t>;

    Monomial() = default;
    static Monomial var(VarIndex v, std::uint32_t e = 1);
    // Factors may be unsorted or repeated; zero exponents are dropped.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    std::uint32_t degree() const;
    std::uint32_t exponent(VarIndex v) const;
    // Exponent vector over x_1..x_n; variables above n must not occur.
    std::vector<std::uint32_t> exponents(VarIndex n) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

    std::string to_string() const;
    std::size_t hash() const;

private:
    std::vector<Factor> f_;
};

// Graded lexicographic order with x1 > x2 > ...; returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse multivariate polynomial with rational coefficients.
// Terms are kept in decreasing graded-lex order with no zero coefficients.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Polynomial() = default;
    Polynomial(const Rational& c);
    Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial var(VarIndex v, std::uint32_t e = 1);
    static Polynomial term(const Monomial& m, const Rational& c);
    // Builds from arbitrary terms, combining like monomials.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    // Throws ArgumentError unless is_constant().
    Rational constant_value() const;
    Rational coefficient(const Monomial& m) const;
    std::uint32_t degree() const;
    VarIndex max_variable() const;
    std::vector<VarIndex> variables() const;
    const Term& leading_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    // Substitutes the given rationals; unlisted variables stay symbolic.
    Polynomial specialize(const std::map<VarIndex, Rational>& values) const;
    Polynomial partial_derivative(VarIndex v) const;
    // All variables must be assigned.
    Rational evaluate(const std::map<VarIndex, Rational>& values) const;

    // Canonical rendering such as "2*x1^2*x2 + x2^3" or "-1/2".
    std::string to_string() const;
    // Same as to_string() without spaces, for whitespace-separated formats.
    std::string to_compact_string() const;
    std::size_t hash() const;

private:
    std::vector<Term> t_;
};

// Collects many terms before sorting once; cheaper than repeated Polynomial::operator+=.
class PolynomialAccumulator {
public:
    void add(const Polynomial& p);
    void add(const Polynomial& p, const Rational& scale);
    Polynomial result() const;

private:
    std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

// Exact scalars are polynomials; a rational is a constant polynomial.
using Scalar = Polynomial;

enum class ArithOp { Add, Sub, Mul, Div };

// Division is defined only for a nonzero constant divisor. Dividing by zero raises
// ArithmeticError, dividing by a non-constant polynomial raises UnsupportedOperation.
Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

// Parses the canonical rendering plus parentheses, e.g. "(x1+x2)^2 - 3/4*x3".
Polynomial parse_polynomial(const std::string& text);

}  // namespace interlace
