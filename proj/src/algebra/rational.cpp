#include "interlace/rational.hpp"

#include "interlace/errors.hpp"

#include <functional>

namespace interlace {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    auto slash = text.find('/');
    auto check_digits = [&](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw ParseError("malformed rational '" + text + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw ParseError("malformed rational '" + text + "'");
    };
    std::string num = text.substr(0, slash);
    check_digits(num, true);
    if (num[0] == '+') num.erase(0, 1);
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(num));
    } else {
        std::string den = text.substr(slash + 1);
        check_digits(den, false);
        mpz_class d(den);
        if (d == 0) throw ArithmeticError("rational with zero denominator");
        q = mpq_class(mpz_class(num), d);
    }
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
    std::size_t h = mpz_get_ui(q_.get_num_mpz_t()) * 1000003u;
    h ^= mpz_get_ui(q_.get_den_mpz_t()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(sgn(q_) + 1);
}

}  // namespace interlace
