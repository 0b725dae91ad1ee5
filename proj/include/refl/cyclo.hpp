#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "refl/rational.hpp"

namespace refl {

/// Dense integer polynomial, coefficients from degree 0 upwards.
using IntPoly = std::vector<std::int64_t>;

/// Returns the n-th cyclotomic polynomial, monic of degree phi(n).
IntPoly cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Smallest conductor generating the same field: Q(zeta_{2m}) = Q(zeta_m) for odd m.
int normalize_conductor(int n);

/// Normalized conductor of the compositum Q(zeta_a, zeta_b).
int common_conductor(int a, int b);

/// Shared, immutable arithmetic context for Q(zeta_L). Obtain via get().
class CycloField {
public:
    /// Context for the normalized conductor of L. Thread-safe; contexts live forever.
    static const CycloField& get(int L);

    [[nodiscard]] int conductor() const noexcept { return conductor_; }
    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] const IntPoly& modulus() const noexcept { return modulus_; }
    /// x^e reduced modulo the cyclotomic polynomial; e taken mod L.
    [[nodiscard]] const IntPoly& power(std::int64_t e) const;

    CycloField(const CycloField&) = delete;
    CycloField& operator=(const CycloField&) = delete;

private:
    explicit CycloField(int L);

    int conductor_;
    int degree_;
    IntPoly modulus_;
    std::vector<IntPoly> powers_;
};

/// Exact element of Q(zeta_L), stored as a fully reduced polynomial in zeta_L.
class CycloNum {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    /// Zero of Q.
    CycloNum();
    /// Zero of Q(zeta_L).
    explicit CycloNum(int conductor);
    CycloNum(int conductor, const Rational& r);
    explicit CycloNum(const CycloField& field);
    CycloNum(const CycloField& field, const Rational& r);
    CycloNum(const CycloField& field, Coeffs coeffs);

    /// zeta_n^k in its own (normalized) conductor.
    static CycloNum zeta(int n, std::int64_t k = 1);
    /// zeta_n^k inside Q(zeta_L); requires Q(zeta_n) to be a subfield.
    static CycloNum zeta_in(int L, int n, std::int64_t k = 1);

    [[nodiscard]] int conductor() const noexcept { return field_->conductor(); }
    [[nodiscard]] const CycloField& field() const noexcept { return *field_; }
    [[nodiscard]] const Coeffs& coeffs() const noexcept { return c_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;
    [[nodiscard]] bool is_rational() const;
    /// Constant coefficient; equals the value when is_rational().
    [[nodiscard]] const Rational& rational_part() const { return c_[0]; }

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const Rational& r);
    CycloNum& operator/=(const CycloNum& o) { return *this *= o.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    CycloNum operator-() const;

    /// Multiplicative inverse via extended gcd against the cyclotomic modulus.
    [[nodiscard]] CycloNum inverse() const;
    /// Image under zeta -> zeta^{-1}, i.e. complex conjugation.
    [[nodiscard]] CycloNum conj() const;
    [[nodiscard]] CycloNum pow(std::int64_t e) const;

    friend bool operator==(const CycloNum& a, const CycloNum& b);

    void append_key(std::string& out) const;

private:
    const CycloField* field_;
    Coeffs c_;
};

/// Embeds a into Q(zeta_L) using zeta_d = zeta_L^{L/d}.
CycloNum lift(const CycloNum& a, int L);

/// a + b, etc. after lifting both to their common conductor.
CycloNum mixed_add(const CycloNum& a, const CycloNum& b);
CycloNum mixed_mul(const CycloNum& a, const CycloNum& b);

}  // namespace refl
