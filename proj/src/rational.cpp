#include "refl/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>

#include "refl/error.hpp"

namespace refl {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = INT64_MIN;

bool fits(i128 v) { return v > static_cast<i128>(kMin) && v <= static_cast<i128>(INT64_MAX); }

std::uint64_t uabs(std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : v; }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
    mpz_class hi = static_cast<unsigned long>(u >> 64);
    mpz_class lo = static_cast<unsigned long>(u & 0xffffffffffffffffULL);
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_small(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && z != LONG_MIN; }

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw DivisionByZero();
    if (n == kMin || d == kMin) {
        assign_big(mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))));
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::uint64_t g = gcd_u64(uabs(n), static_cast<std::uint64_t>(d));
    num_ = n / static_cast<std::int64_t>(g);
    den_ = d / static_cast<std::int64_t>(g);
}

Rational::Rational(const mpq_class& q) { assign_big(q); }

void Rational::assign_big(mpq_class q) {
    q.canonicalize();
    if (mpz_small(q.get_num()) && mpz_small(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || q.set_str(t, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZero();
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t r;
            if (!__builtin_add_overflow(num_, o.num_, &r) && r != kMin) {
                num_ = r;
                return *this;
            }
        }
        std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
        std::int64_t d1g = den_ / static_cast<std::int64_t>(g);
        std::int64_t d2g = o.den_ / static_cast<std::int64_t>(g);
        i128 t = static_cast<i128>(num_) * d2g + static_cast<i128>(o.num_) * d1g;
        if (t == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        std::uint64_t g2 = g;
        if (g != 1) {
            u128 at = t < 0 ? static_cast<u128>(-t) : static_cast<u128>(t);
            g2 = gcd_u64(static_cast<std::uint64_t>(at % g), g);
        }
        i128 n = t / static_cast<i128>(g2);
        i128 d = static_cast<i128>(d1g) * (o.den_ / static_cast<std::int64_t>(g2));
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(mpq_class(to_mpz(n), to_mpz(d)));
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        std::int64_t n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
        if (d2 != 1) {
            auto g = static_cast<std::int64_t>(gcd_u64(uabs(n1), static_cast<std::uint64_t>(d2)));
            n1 /= g;
            d2 /= g;
        }
        if (d1 != 1) {
            auto g = static_cast<std::int64_t>(gcd_u64(uabs(n2), static_cast<std::uint64_t>(d1)));
            n2 /= g;
            d1 /= g;
        }
        std::int64_t n, d;
        if (!__builtin_mul_overflow(n1, n2, &n) && !__builtin_mul_overflow(d1, d2, &d) && n != kMin) {
            num_ = n;
            den_ = d;
            return *this;
        }
        assign_big(mpq_class(to_mpz(static_cast<i128>(n1) * n2), to_mpz(static_cast<i128>(d1) * d2)));
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

void Rational::append_key(std::string& out) const {
    auto varint = [&out](std::uint64_t v) {
        while (v >= 0x80) {
            out.push_back(static_cast<char>((v & 0x7f) | 0x80));
            v >>= 7;
        }
        out.push_back(static_cast<char>(v));
    };
    if (big_) {
        out.push_back('\xff');
        std::string s = big_->get_str();
        varint(s.size());
        out += s;
        return;
    }
    auto zig = (static_cast<std::uint64_t>(num_) << 1) ^ static_cast<std::uint64_t>(num_ >> 63);
    if (den_ == 1) {
        out.push_back('\x01');
        varint(zig);
    } else {
        out.push_back('\x02');
        varint(zig);
        varint(static_cast<std::uint64_t>(den_));
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace refl
