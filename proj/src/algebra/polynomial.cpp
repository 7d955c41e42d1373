#include "interlace/polynomial.hpp"

#include "interlace/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace interlace {

Monomial Monomial::var(VarIndex v, std::uint32_t e) {
    if (v == 0) throw ArgumentError("variable indices start at 1");
    Monomial m;
    if (e > 0) m.f_.push_back({v, e});
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (v == 0) throw ArgumentError("variable indices start at 1");
        if (e == 0) continue;
        if (!m.f_.empty() && m.f_.back().first == v)
            m.f_.back().second += e;
        else
            m.f_.push_back({v, e});
    }
    return m;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& f : f_) d += f.second;
    return d;
}

std::uint32_t Monomial::exponent(VarIndex v) const {
    for (const auto& f : f_)
        if (f.first == v) return f.second;
    return 0;
}

std::vector<std::uint32_t> Monomial::exponents(VarIndex n) const {
    std::vector<std::uint32_t> out(n, 0);
    for (const auto& [v, e] : f_) {
        if (v > n) throw ArgumentError("monomial has variable beyond x" + std::to_string(n));
        out[v - 1] = e;
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.f_.reserve(a.f_.size() + b.f_.size());
    auto i = a.f_.begin(), j = b.f_.begin();
    while (i != a.f_.end() && j != b.f_.end()) {
        if (i->first < j->first) {
            m.f_.push_back(*i++);
        } else if (j->first < i->first) {
            m.f_.push_back(*j++);
        } else {
            m.f_.push_back({i->first, i->second + j->second});
            ++i;
            ++j;
        }
    }
    m.f_.insert(m.f_.end(), i, a.f_.end());
    m.f_.insert(m.f_.end(), j, b.f_.end());
    return m;
}

std::string Monomial::to_string() const {
    std::string s;
    for (const auto& [v, e] : f_) {
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(v);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& [v, e] : f_) {
        h ^= (static_cast<std::size_t>(v) << 20) ^ e;
        h *= 1099511628211ULL;
    }
    return h;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i] == fb[i]) continue;
        if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first ? 1 : -1;
        return fa[i].second < fb[i].second ? -1 : 1;
    }
    if (fa.size() == fb.size()) return 0;
    return i < fa.size() ? 1 : -1;
}

namespace {

bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
    return grlex_compare(a.mono, b.mono) > 0;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) t_.push_back({Monomial(), c});
}

Polynomial Polynomial::var(VarIndex v, std::uint32_t e) {
    return term(Monomial::var(v, e), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
        if (!fresh) it->second += t.coeff;
    }
    Polynomial p;
    p.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.t_.push_back({m, c});
    std::sort(p.t_.begin(), p.t_.end(), term_before);
    return p;
}

bool Polynomial::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw ArgumentError("polynomial " + to_string() + " is not constant");
    return t_.empty() ? Rational(0) : t_[0].coeff;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const Term& t, const Monomial& key) {
        return grlex_compare(t.mono, key) > 0;
    });
    if (it != t_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

std::uint32_t Polynomial::degree() const {
    return t_.empty() ? 0 : t_.front().mono.degree();
}

VarIndex Polynomial::max_variable() const {
    VarIndex v = 0;
    for (const auto& t : t_)
        if (!t.mono.factors().empty()) v = std::max(v, t.mono.factors().back().first);
    return v;
}

std::vector<VarIndex> Polynomial::variables() const {
    std::vector<VarIndex> vs;
    for (const auto& t : t_)
        for (const auto& f : t.mono.factors()) vs.push_back(f.first);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

const Polynomial::Term& Polynomial::leading_term() const {
    if (t_.empty()) throw ArgumentError("zero polynomial has no leading term");
    return t_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.t_) t.coeff = -t.coeff;
    return p;
}

namespace {

// Merge of two sorted term lists; sign is +1 or -1 for the second operand.
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b, int sign) {
    std::vector<Polynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        int c = grlex_compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
            ++j;
        } else {
            Rational s = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, sign > 0 ? b[j].coeff : -b[j].coeff});
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.t_.empty()) return *this;
    t_ = merge_terms(t_, o.t_, 1);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.t_.empty()) return *this;
    t_ = merge_terms(t_, o.t_, -1);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.t_.empty() || b.t_.empty()) return Polynomial();
    if (a.t_.size() == 1) return b.times_monomial(a.t_[0].mono).scaled(a.t_[0].coeff);
    if (b.t_.size() == 1) return a.times_monomial(b.t_[0].mono).scaled(b.t_[0].coeff);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.t_.size() * b.t_.size() / 2 + 1);
    for (const auto& x : a.t_) {
        for (const auto& y : b.t_) {
            auto [it, fresh] = acc.try_emplace(x.mono * y.mono);
            it->second += x.coeff * y.coeff;
        }
    }
    Polynomial p;
    p.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) p.t_.push_back({m, c});
    std::sort(p.t_.begin(), p.t_.end(), term_before);
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (!(a.t_[i].mono == b.t_[i].mono) || !(a.t_[i].coeff == b.t_[i].coeff)) return false;
    return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial();
    Polynomial p = *this;
    if (c.is_one()) return p;
    for (auto& t : p.t_) t.coeff *= c;
    return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial p = *this;
    if (m.is_one()) return p;
    // Multiplying by a monomial preserves the graded-lex order.
    for (auto& t : p.t_) t.mono = t.mono * m;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1), base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Polynomial Polynomial::specialize(const std::map<VarIndex, Rational>& values) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
        Rational c = t.coeff;
        std::vector<Monomial::Factor> kept;
        for (const auto& [v, e] : t.mono.factors()) {
            auto it = values.find(v);
            if (it == values.end())
                kept.push_back({v, e});
            else
                c *= it->second.pow(e);
        }
        if (!c.is_zero()) out.push_back({Monomial::from_factors(std::move(kept)), c});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::partial_derivative(VarIndex v) const {
    std::vector<Term> out;
    for (const auto& t : t_) {
        std::uint32_t e = t.mono.exponent(v);
        if (e == 0) continue;
        std::vector<Monomial::Factor> fs = t.mono.factors();
        for (auto& f : fs)
            if (f.first == v) f.second -= 1;
        out.push_back({Monomial::from_factors(std::move(fs)), t.coeff * Rational(static_cast<long>(e))});
    }
    return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const std::map<VarIndex, Rational>& values) const {
    Polynomial p = specialize(values);
    if (!p.is_constant()) throw ArgumentError("evaluate: unassigned variables remain in " + p.to_string());
    return p.constant_value();
}

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const auto& t = t_[i];
        bool neg = t.coeff.sign() < 0;
        Rational mag = neg ? -t.coeff : t.coeff;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (t.mono.is_one()) {
            s += mag.to_string();
        } else {
            if (!mag.is_one()) s += mag.to_string() + "*";
            s += t.mono.to_string();
        }
    }
    return s;
}

std::string Polynomial::to_compact_string() const {
    std::string s = to_string();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

std::size_t Polynomial::hash() const {
    std::size_t h = t_.size();
    for (const auto& t : t_) h = h * 31 + (t.mono.hash() ^ (t.coeff.hash() << 1));
    return h;
}

void PolynomialAccumulator::add(const Polynomial& p) {
    for (const auto& t : p.terms()) {
        auto [it, fresh] = acc_.try_emplace(t.mono, t.coeff);
        if (!fresh) it->second += t.coeff;
    }
}

void PolynomialAccumulator::add(const Polynomial& p, const Rational& scale) {
    for (const auto& t : p.terms()) {
        auto [it, fresh] = acc_.try_emplace(t.mono);
        it->second += t.coeff * scale;
    }
}

Polynomial PolynomialAccumulator::result() const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(acc_.size());
    for (const auto& [m, c] : acc_)
        if (!c.is_zero()) terms.push_back({m, c});
    return Polynomial::from_terms(std::move(terms));
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div:
            if (b.is_zero()) throw ArithmeticError("division by zero");
            if (!b.is_constant())
                throw UnsupportedOperation("division by the non-constant polynomial " + b.to_string());
            return a.scaled(b.constant_value().inverse());
    }
    throw ArgumentError("unknown arithmetic operation");
}

}  // namespace interlace
