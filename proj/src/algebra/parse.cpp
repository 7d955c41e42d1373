#include "interlace/errors.hpp"
#include "interlace/polynomial.hpp"

#include <cctype>

namespace interlace {

namespace {

// Recursive descent over: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := ('-')? atom ('^' int)?, atom := rational | 'x' int | '(' expr ')'.
class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial '" + s_ + "': " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    Polynomial expr() {
        Polynomial p;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept('+')) {
            } else if (accept('-')) {
                sign = -1;
            } else if (!first) {
                break;
            }
            Polynomial t = term();
            p += sign > 0 ? t : -t;
            first = false;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p *= factor();
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (accept('^')) {
            std::string e = digits();
            if (e.size() > 6) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("missing ')'");
            return p;
        }
        if (c == 'x') {
            ++pos_;
            std::string v = digits();
            if (v.size() > 9) fail("variable index too large");
            unsigned long idx = std::stoul(v);
            if (idx == 0) fail("variable indices start at 1");
            return Polynomial::var(static_cast<VarIndex>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                num += "/" + digits();
            }
            return Polynomial(Rational::parse(num));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    return PolyParser(text).run();
}

}  // namespace interlace
