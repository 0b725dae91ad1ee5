#include "refl/literal.hpp"

#include <cctype>

#include "refl/error.hpp"

namespace refl {
namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    CycloNum parse() {
        CycloNum v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("scalar literal '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    CycloNum expr() {
        CycloNum v = term();
        for (;;) {
            if (eat('+')) {
                v = mixed_add(v, term());
            } else if (eat('-')) {
                v = mixed_add(v, -term());
            } else {
                return v;
            }
        }
    }

    CycloNum term() {
        CycloNum v = unary();
        for (;;) {
            if (eat('*')) {
                v = mixed_mul(v, unary());
            } else if (eat('/')) {
                CycloNum d = unary();
                if (d.is_zero()) throw DivisionByZero();
                v = mixed_mul(v, d.inverse());
            } else {
                return v;
            }
        }
    }

    CycloNum unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    CycloNum power() {
        CycloNum base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            std::string e = digits();
            if (e.size() > 9) fail("exponent too large");
            std::int64_t k = std::stoll(e);
            if (neg && base.is_zero()) throw DivisionByZero();
            return base.pow(neg ? -k : k);
        }
        return base;
    }

    CycloNum atom() {
        skip();
        if (eat('(')) {
            CycloNum v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'z' || s_[pos_] == 'Z')) {
            ++pos_;
            std::string n = digits();
            if (n.size() > 6) fail("root-of-unity order too large");
            int order = std::stoi(n);
            if (order < 1) fail("root-of-unity order must be positive");
            return CycloNum::zeta(order);
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            return CycloNum(1, Rational::parse(digits()));
        }
        fail("expected a number, zN or '('");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

CycloNum parse_scalar(std::string_view text) { return Parser(text).parse(); }

std::string format_scalar(const CycloNum& x) {
    const int L = x.conductor();
    const auto& c = x.coeffs();
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Rational mag = c[k].sign() < 0 ? -c[k] : c[k];
        std::string term;
        if (k == 0) {
            term = mag.str();
        } else {
            std::string mono = "z" + std::to_string(L) + (k > 1 ? "^" + std::to_string(k) : "");
            term = mag.is_one() ? mono : mag.str() + "*" + mono;
        }
        if (out.empty()) {
            out = (c[k].sign() < 0 ? "-" : "") + term;
        } else {
            out += (c[k].sign() < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace refl
