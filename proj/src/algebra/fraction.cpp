#include "interlace/fraction.hpp"

#include "interlace/errors.hpp"

#include <algorithm>

namespace interlace {

Fraction::Fraction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ArithmeticError("fraction with zero denominator");
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return a + (-b);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    return a * b.inverse();
}

bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Fraction Fraction::inverse() const {
    if (num_.is_zero()) throw ArithmeticError("inverse of zero fraction");
    return Fraction(den_, num_);
}

Fraction Fraction::specialize(const std::map<VarIndex, Rational>& values) const {
    Polynomial d = den_.specialize(values);
    if (d.is_zero()) throw ArithmeticError("denominator vanishes under specialization");
    return Fraction(num_.specialize(values), d).simplified();
}

namespace {

// Largest monomial dividing every term of p.
Monomial monomial_content(const Polynomial& p) {
    if (p.is_zero()) return Monomial();
    std::vector<Monomial::Factor> common = p.terms().front().mono.factors();
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> next;
        for (const auto& [v, e] : common) {
            auto have = t.mono.exponent(v);
            if (have > 0) next.push_back({v, std::min(e, have)});
        }
        common = std::move(next);
        if (common.empty()) break;
    }
    return Monomial::from_factors(common);
}

Polynomial divide_by_monomial(const Polynomial& p, const Monomial& m) {
    std::vector<Polynomial::Term> out;
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> fs = t.mono.factors();
        for (auto& f : fs) f.second -= m.exponent(f.first);
        out.push_back({Monomial::from_factors(std::move(fs)), t.coeff});
    }
    return Polynomial::from_terms(std::move(out));
}

}  // namespace

Fraction Fraction::simplified() const {
    if (num_.is_zero()) return Fraction(Polynomial(), Polynomial(1));
    Monomial g_num = monomial_content(num_), g_den = monomial_content(den_);
    std::vector<Monomial::Factor> g;
    for (const auto& [v, e] : g_num.factors()) {
        auto d = g_den.exponent(v);
        if (d > 0) g.push_back({v, std::min(e, d)});
    }
    Monomial gm = Monomial::from_factors(g);
    Polynomial n = divide_by_monomial(num_, gm), d = divide_by_monomial(den_, gm);
    Rational lead = d.leading_term().coeff;
    return Fraction(n.scaled(lead.inverse()), d.scaled(lead.inverse()));
}

Rational Fraction::to_rational() const {
    Fraction f = simplified();
    if (!f.den_.is_constant() || !f.num_.is_constant())
        throw ArgumentError("fraction " + to_string() + " is not constant");
    return f.num_.constant_value() / f.den_.constant_value();
}

std::string Fraction::to_string() const {
    Fraction f = simplified();
    if (f.den_ == Polynomial(1)) return f.num_.to_string();
    auto wrap = [](const Polynomial& p, bool denominator) {
        bool product = p.terms().size() == 1 && !p.is_constant() &&
                       (p.terms().front().mono.factors().size() > 1 || p.terms().front().mono.degree() > 1 ||
                        !p.terms().front().coeff.is_one());
        bool paren = p.terms().size() > 1 || (denominator && product);
        return paren ? "(" + p.to_string() + ")" : p.to_string();
    };
    return wrap(f.num_, false) + "/" + wrap(f.den_, true);
}

}  // namespace interlace
