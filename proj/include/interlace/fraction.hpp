#pragma once

#include "interlace/polynomial.hpp"

#include <map>
#include <string>

namespace interlace {

// Quotient of two polynomials. No cancellation is attempted; equality is decided by
// cross-multiplication.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(const Polynomial& p) : num_(p), den_(1) {}
    Fraction(long c) : num_(c), den_(1) {}
    // Throws ArithmeticError on a zero denominator.
    Fraction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Fraction operator-() const { return Fraction(-num_, den_); }
    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);
    friend bool operator==(const Fraction& a, const Fraction& b);
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

    Fraction inverse() const;
    // Throws ArithmeticError if the denominator specializes to zero.
    Fraction specialize(const std::map<VarIndex, Rational>& values) const;
    // Reduces when the denominator is constant or divides evenly by a monomial content.
    Fraction simplified() const;
    bool is_polynomial() const { return den_.is_constant(); }
    // Throws ArgumentError unless the fraction reduces to a constant.
    Rational to_rational() const;

    std::string to_string() const;

private:
    Polynomial num_;
    Polynomial den_;
};

}  // namespace interlace
