#include "refl/cyclo.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "refl/error.hpp"

namespace refl {
namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient and remainder of a by b over Q; b nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    RatPoly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational{});
    Rational lead_inv = b.back().inverse();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i].is_zero()) continue;
        Rational f = a[i] * lead_inv;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int normalize_conductor(int n) {
    if (n < 1) throw PreconditionFailed("conductor must be positive");
    return n % 4 == 2 ? n / 2 : n;
}

int common_conductor(int a, int b) { return normalize_conductor(std::lcm(normalize_conductor(a), normalize_conductor(b))); }

IntPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw PreconditionFailed("cyclotomic_polynomial: n must be positive");
    static std::mutex mu;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    IntPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntPoly div = cyclotomic_polynomial(d);
        IntPoly q(num.size() - div.size() + 1, 0);
        for (std::size_t i = num.size(); i-- >= div.size();) {
            std::int64_t f = num[i];
            if (f == 0) continue;
            std::size_t shift = i - (div.size() - 1);
            q[shift] = f;
            for (std::size_t j = 0; j < div.size(); ++j) num[shift + j] -= f * div[j];
        }
        num = std::move(q);
    }
    std::lock_guard lock(mu);
    cache.emplace(n, num);
    return num;
}

CycloField::CycloField(int L)
    : conductor_(L), degree_(euler_phi(L)), modulus_(cyclotomic_polynomial(L)) {
    powers_.reserve(L);
    IntPoly cur(degree_, 0);
    cur[0] = 1;
    for (int e = 0; e < L; ++e) {
        powers_.push_back(cur);
        // multiply by x and reduce by the monic modulus
        std::int64_t top = cur[degree_ - 1];
        for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i];
    }
}

const CycloField& CycloField::get(int L) {
    L = normalize_conductor(L);
    thread_local std::array<const CycloField*, 512> recent{};
    if (L < static_cast<int>(recent.size()) && recent[L]) return *recent[L];
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[L];
    if (!slot) slot.reset(new CycloField(L));
    if (L < static_cast<int>(recent.size())) recent[L] = slot.get();
    return *slot;
}

const IntPoly& CycloField::power(std::int64_t e) const {
    e %= conductor_;
    if (e < 0) e += conductor_;
    return powers_[static_cast<std::size_t>(e)];
}

CycloNum::CycloNum() : CycloNum(1) {}

CycloNum::CycloNum(int conductor) : CycloNum(CycloField::get(conductor)) {}

CycloNum::CycloNum(const CycloField& field) : field_(&field), c_(field.degree()) {}

CycloNum::CycloNum(const CycloField& field, const Rational& r) : CycloNum(field) { c_[0] = r; }

CycloNum::CycloNum(int conductor, const Rational& r) : CycloNum(conductor) { c_[0] = r; }

CycloNum::CycloNum(const CycloField& field, Coeffs coeffs) : field_(&field), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != field.degree())
        throw DimensionMismatch("CycloNum: coefficient count does not match field degree");
}

CycloNum CycloNum::zeta(int n, std::int64_t k) { return zeta_in(normalize_conductor(n), n, k); }

CycloNum CycloNum::zeta_in(int L, int n, std::int64_t k) {
    const CycloField& f = CycloField::get(L);
    int nn = normalize_conductor(n);
    if (f.conductor() % nn != 0)
        throw PreconditionFailed("zeta_" + std::to_string(n) + " is not in Q(zeta_" + std::to_string(L) + ")");
    std::int64_t e;
    bool negate = false;
    if (nn != n) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
        std::int64_t m = nn;
        e = ((k % (2 * m)) + 2 * m) % (2 * m);
        negate = (e % 2) != 0;
        e = e * ((m + 1) / 2) % m;
    } else {
        e = ((k % nn) + nn) % nn;
    }
    e *= f.conductor() / nn;
    const IntPoly& p = f.power(e);
    Coeffs c(f.degree());
    for (int i = 0; i < f.degree(); ++i) c[i] = Rational(negate ? -p[i] : p[i]);
    return CycloNum(f, std::move(c));
}

bool CycloNum::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycloNum::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (field_ != o.field_) throw ConductorMismatch(conductor(), o.conductor());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (field_ != o.field_) throw ConductorMismatch(conductor(), o.conductor());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
    for (auto& c : c_)
        if (!c.is_zero()) c *= r;
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    *this = *this * o;
    return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) throw ConductorMismatch(a.conductor(), b.conductor());
    const int deg = a.field_->degree();
    if (deg == 1) {
        CycloNum r = a;
        r.c_[0] *= b.c_[0];
        return r;
    }
    boost::container::small_vector<Rational, 8> prod(2 * deg - 1);
    for (int i = 0; i < deg; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < deg; ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    CycloNum r(*a.field_, CycloNum::Coeffs(prod.begin(), prod.begin() + deg));
    for (int k = deg; k < 2 * deg - 1; ++k) {
        if (prod[k].is_zero()) continue;
        const IntPoly& p = a.field_->power(k);
        for (int i = 0; i < deg; ++i)
            if (p[i] != 0) r.c_[i] += prod[k] * Rational(p[i]);
    }
    return r;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.c_)
        if (!c.is_zero()) c = -c;
    return r;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    const int deg = field_->degree();
    if (is_rational()) return CycloNum(field_->conductor(), c_[0].inverse());
    RatPoly m(field_->modulus().begin(), field_->modulus().end());
    RatPoly a(c_.begin(), c_.end());
    trim(a);
    // Invariant: s_i * a == r_i (mod m).
    RatPoly r0 = m, r1 = a, s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible.
    Rational c_inv = r0[0].inverse();
    auto [q, u] = divmod(s0, m);
    Coeffs out(deg);
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * c_inv;
    return CycloNum(*field_, std::move(out));
}

CycloNum CycloNum::conj() const {
    const int deg = field_->degree();
    Coeffs out(deg);
    out[0] = c_[0];
    for (int k = 1; k < deg; ++k) {
        if (c_[k].is_zero()) continue;
        const IntPoly& p = field_->power(field_->conductor() - k);
        for (int i = 0; i < deg; ++i)
            if (p[i] != 0) out[i] += c_[k] * Rational(p[i]);
    }
    return CycloNum(*field_, std::move(out));
}

CycloNum CycloNum::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum result(field_->conductor(), Rational(1));
    CycloNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) throw ConductorMismatch(a.conductor(), b.conductor());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (!(a.c_[i] == b.c_[i])) return false;
    return true;
}

void CycloNum::append_key(std::string& out) const {
    for (const auto& c : c_) c.append_key(out);
}

CycloNum lift(const CycloNum& a, int L) {
    const CycloField& target = CycloField::get(L);
    if (&target == &a.field()) return a;
    const int from = a.conductor();
    if (target.conductor() % from != 0)
        throw PreconditionFailed("cannot lift Q(zeta_" + std::to_string(from) + ") into Q(zeta_" +
                                 std::to_string(L) + ")");
    const int step = target.conductor() / from;
    CycloNum::Coeffs out(target.degree());
    const auto& c = a.coeffs();
    out[0] = c[0];
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const IntPoly& p = target.power(static_cast<std::int64_t>(k) * step);
        for (int i = 0; i < target.degree(); ++i)
            if (p[i] != 0) out[i] += c[k] * Rational(p[i]);
    }
    return CycloNum(target, std::move(out));
}

CycloNum mixed_add(const CycloNum& a, const CycloNum& b) {
    int L = common_conductor(a.conductor(), b.conductor());
    return lift(a, L) + lift(b, L);
}

CycloNum mixed_mul(const CycloNum& a, const CycloNum& b) {
    int L = common_conductor(a.conductor(), b.conductor());
    return lift(a, L) * lift(b, L);
}

}  // namespace refl
