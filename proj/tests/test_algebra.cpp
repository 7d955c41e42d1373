#include "interlace/errors.hpp"
#include "interlace/fraction.hpp"
#include "interlace/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace interlace;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }
Polynomial x(int i) { return Polynomial::var(static_cast<VarIndex>(i)); }

Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 21) - 10;
    long den = static_cast<long>(rng() % 9) + 1;
    return Rational(num, den);
}

Polynomial random_polynomial(std::mt19937_64& rng, int vars = 3, int terms = 4, int max_exp = 3) {
    std::vector<Polynomial::Term> t;
    for (int i = 0; i < terms; ++i) {
        std::vector<Monomial::Factor> f;
        for (int v = 1; v <= vars; ++v) f.emplace_back(v, static_cast<std::uint32_t>(rng() % (max_exp + 1)));
        t.push_back({Monomial::from_factors(f), random_rational(rng)});
    }
    return Polynomial::from_terms(t);
}

}  // namespace

TEST(Rational, CanonicalForm) {
    Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational(1, 0), ArithmeticError);
}

TEST(Rational, ArithmeticExamples) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ((Rational(1, 2) / Rational(1, 4)).to_string(), "2");
    EXPECT_THROW(Rational(1) / Rational(0), ArithmeticError);
}

TEST(ScalarArith, Examples) {
    EXPECT_EQ(arith(Scalar(Rational(1, 2)), Scalar(Rational(1, 3)), ArithOp::Add), Scalar(Rational(5, 6)));
    EXPECT_EQ(arith(P("x1 + x2"), P("x1 - x2"), ArithOp::Mul), P("x1^2 - x2^2"));
    // x12*x21 / (x12 + x21) at x12 = 1, x21 = 2.
    std::map<VarIndex, Rational> at{{12, Rational(1)}, {21, Rational(2)}};
    Scalar num = P("x12*x21").specialize(at), den = P("x12 + x21").specialize(at);
    EXPECT_EQ(arith(num, den, ArithOp::Div), Scalar(Rational(2, 3)));
}

TEST(ScalarArith, DivisionErrors) {
    EXPECT_THROW(arith(P("x1"), Scalar(0), ArithOp::Div), ArithmeticError);
    EXPECT_THROW(arith(P("1"), P("x1"), ArithOp::Div), UnsupportedOperation);
}

TEST(Polynomial, CanonicalRendering) {
    Polynomial p = Polynomial::var(2, 3) + x(1).pow(2) * x(2) * Polynomial(2);
    EXPECT_EQ(p.to_string(), "2*x1^2*x2 + x2^3");
    EXPECT_EQ(Polynomial().to_string(), "0");
    EXPECT_EQ(Polynomial(Rational(-1, 2)).to_string(), "-1/2");
    EXPECT_EQ(P(p.to_string()), p);
}

TEST(Polynomial, ZeroCoefficientsDropped) {
    Polynomial p = x(1) - x(1);
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
}

TEST(Polynomial, SpecializeExamples) {
    EXPECT_EQ(P("x1 + x2").specialize({{1, Rational(0)}}), x(2));
    EXPECT_EQ(P("x1 + x2 + x3").specialize({{3, Rational(0)}}), P("x1 + x2"));
}

TEST(Polynomial, PartialDerivativeExamples) {
    EXPECT_EQ(P("x1^2*x2").partial_derivative(1), P("2*x1*x2"));
    EXPECT_TRUE(P("x2^3").partial_derivative(1).is_zero());
    // d/dx1 of x1*(x2 + x3) at x1 = 0, by brute-force expansion.
    Polynomial f = x(1) * (x(2) + x(3));
    EXPECT_EQ(f.partial_derivative(1).specialize({{1, Rational(0)}}), x(2) + x(3));
}

TEST(Polynomial, ParseErrors) {
    EXPECT_THROW(P("x1 +"), ParseError);
    EXPECT_THROW(P("(x1"), ParseError);
    EXPECT_THROW(P("y2"), ParseError);
}

TEST(Polynomial, GrlexOrder) {
    EXPECT_GT(grlex_compare(Monomial::var(1), Monomial::var(2)), 0);
    EXPECT_GT(grlex_compare(Monomial::var(2, 2), Monomial::var(1)), 0);
    EXPECT_EQ(P("x2^2 + x1*x2 + x1").leading_term().mono, Monomial::from_factors({{1, 1}, {2, 1}}));
}

TEST(PolynomialProperty, RingAxioms) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = random_polynomial(rng), b = random_polynomial(rng), c = random_polynomial(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_TRUE((a + (-a)).is_zero());
        ASSERT_EQ(a * Polynomial(1), a);
    }
}

TEST(RationalProperty, FieldAxioms) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), Rational(1));
        ASSERT_EQ(a - a, Rational(0));
    }
}

TEST(PolynomialProperty, SpecializeIsHomomorphism) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_polynomial(rng), q = random_polynomial(rng);
        std::map<VarIndex, Rational> at;
        for (VarIndex v = 1; v <= 3; ++v)
            if (rng() % 2) at[v] = random_rational(rng);
        ASSERT_EQ((p * q).specialize(at), p.specialize(at) * q.specialize(at));
        ASSERT_EQ((p + q).specialize(at), p.specialize(at) + q.specialize(at));
    }
}

TEST(PolynomialProperty, LeibnizRule) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_polynomial(rng), q = random_polynomial(rng);
        for (VarIndex v = 1; v <= 3; ++v)
            ASSERT_EQ((p * q).partial_derivative(v), p.partial_derivative(v) * q + p * q.partial_derivative(v));
    }
}

TEST(PolynomialProperty, AccumulatorMatchesRepeatedSum) {
    std::mt19937_64 rng(15);
    PolynomialAccumulator acc;
    Polynomial sum;
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_polynomial(rng);
        acc.add(p);
        sum += p;
    }
    EXPECT_EQ(acc.result(), sum);
}

TEST(Fraction, CrossMultipliedEquality) {
    // 1/x12 + 1/x21 against (x12 + x21)/(x12*x21).
    Fraction a = Fraction(1) / Fraction(P("x12")) + Fraction(1) / Fraction(P("x21"));
    Fraction b(P("x12 + x21"), P("x12*x21"));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.specialize({{12, Rational(1)}, {21, Rational(1)}}).to_rational(), Rational(2));
}

TEST(Fraction, Errors) {
    EXPECT_THROW(Fraction(P("x1"), Polynomial()), ArithmeticError);
    EXPECT_THROW(Fraction(1) / Fraction(0), ArithmeticError);
    EXPECT_THROW(Fraction(P("1"), P("x1 - 1")).specialize({{1, Rational(1)}}), ArithmeticError);
}

TEST(Fraction, SimplifiedRendering) {
    Fraction f(P("x11*x12*x21"), P("x11*x12"));
    EXPECT_EQ(f.simplified().to_string(), "x21");
    EXPECT_EQ(Fraction(P("1"), P("x11*x12")).to_string(), "1/(x11*x12)");
}
