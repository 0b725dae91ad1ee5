#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace refl {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in 64 bits live inline;
/// everything else is held by a GMP rational. The representation is
/// canonical: a value is stored in big form only if it does not fit the
/// inline form, so equality never needs to compare across forms.
class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses `p` or `p/q` with an optional sign.
    static Rational parse(const std::string& text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] int sign() const;

    /// Inline numerator/denominator; only meaningful when is_small().
    [[nodiscard]] std::int64_t small_num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t small_den() const noexcept { return den_; }

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    [[nodiscard]] Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    /// Appends a compact, injective byte encoding (used for canonical keys).
    void append_key(std::string& out) const;

private:
    void assign_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace refl
