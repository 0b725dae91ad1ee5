#include "refl/family.hpp"

#include <map>

#include "refl/error.hpp"
#include "refl/springer.hpp"

namespace refl {
namespace {

int alpha_conductor(int b, const std::vector<CycloNum>& alphas) {
    int L = normalize_conductor(b);
    for (const auto& a : alphas) L = common_conductor(L, a.conductor());
    return L;
}

void check_alphas(int k, const std::vector<CycloNum>& alphas) {
    if (k < 1 || static_cast<int>(alphas.size()) != k) throw PreconditionFailed("need exactly k alphas, k >= 1");
    for (const auto& a : alphas)
        if (a.is_zero()) throw PreconditionFailed("alphas must be nonzero");
}

ClassicalWitness signed_witness(char family, int n, int b, int k, const std::vector<CycloNum>& alphas) {
    check_alphas(k, alphas);
    if (b < 2) throw PreconditionFailed("b must exceed 1");
    const int m = block_size(family, b);
    if (m * k > n) throw PreconditionFailed("blocks do not fit in n coordinates");
    const int L = alpha_conductor(b, alphas);
    const CycloField& f = CycloField::get(L);
    ClassicalWitness w{TypeLabel::make(family, n), b, k, {}, Vector(n, CycloNum(f)), {}, {}};
    for (const auto& a : alphas) w.alphas.push_back(lift(a, L));
    for (int i = 0; i < n; ++i) {
        w.source.push_back(i);
        w.sign.push_back(1);
    }
    // block j: (a, z a, ..., z^{m-1} a); z times it is the block shifted left,
    // closing with z^m a = -a for even b and a for odd b
    const int wrap_sign = b % 2 == 0 ? -1 : 1;
    int flips = 0;
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i) {
            const int pos = j * m + i;
            w.vector[pos] = CycloNum::zeta_in(L, b, i) * w.alphas[j];
            w.source[pos] = i + 1 < m ? pos + 1 : j * m;
            w.sign[pos] = i + 1 < m ? 1 : wrap_sign;
            flips += w.sign[pos] < 0;
        }
    if (family == 'D' && flips % 2) {
        if (m * k == n) throw PreconditionFailed("no even signed permutation realizes this witness");
        w.sign[n - 1] = -1;
    }
    return w;
}

}  // namespace

int block_size(char family, int b) {
    if (family == 'A') return b;
    return b % 2 == 0 ? b / 2 : b;
}

ClassicalWitness construct_eigenvector_A(int n, int b, int k, const std::vector<CycloNum>& alphas) {
    check_alphas(k, alphas);
    if (b < 2) throw PreconditionFailed("b must exceed 1");
    if (n < 2 || k * b > n) throw PreconditionFailed("need kb <= n");
    const int L = alpha_conductor(b, alphas);
    const CycloField& f = CycloField::get(L);
    ClassicalWitness w{TypeLabel::make('A', n - 1), b, k, {}, Vector(n, CycloNum(f)), {}, std::vector<int>(n, 1)};
    for (const auto& a : alphas) w.alphas.push_back(lift(a, L));
    for (int i = 0; i < n; ++i) w.source.push_back(i);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < b; ++i) {
            const int pos = j * b + i;
            w.vector[pos] = CycloNum::zeta_in(L, b, i) * w.alphas[j];
            w.source[pos] = i + 1 < b ? pos + 1 : j * b;
        }
    return w;
}

ClassicalWitness construct_eigenvector_B(int n, int b, int k, const std::vector<CycloNum>& alphas) {
    return signed_witness('B', n, b, k, alphas);
}

ClassicalWitness construct_eigenvector_D(int n, int b, int k, const std::vector<CycloNum>& alphas) {
    return signed_witness('D', n, b, k, alphas);
}

Vector apply_witness(const ClassicalWitness& w) {
    Vector out;
    for (std::size_t i = 0; i < w.vector.size(); ++i) {
        CycloNum v = w.vector[w.source[i]];
        out.push_back(w.sign[i] < 0 ? -v : v);
    }
    return out;
}

Matrix witness_matrix(const RootSystem& rs, const ClassicalWitness& w) {
    if (!(rs.label() == w.label)) throw PreconditionFailed("witness belongs to another type");
    InvariantSet inv = invariant_polynomials(rs);
    const int n = rs.rank();
    const CycloField& q = CycloField::get(1);
    Matrix m(rs.base_field(), n, n);
    for (int c = 0; c < n; ++c) {
        // image of the simple root alpha_c under the signed permutation
        Vector e(n, CycloNum(q));
        e[c] = CycloNum(q, Rational(1));
        Vector x = inv.to_model(e);
        Vector y(x.size(), CycloNum(q));
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = w.sign[i] < 0 ? -x[w.source[i]] : x[w.source[i]];
        Vector col = inv.to_root(y);
        for (int r = 0; r < n; ++r) m(r, c) = col[r];
    }
    return m;
}

StabilizerShape predicted_max_stabilizer(char family, int n, int b, int k) {
    if (family != 'A' && family != 'B' && family != 'D') throw UnsupportedType("closed forms exist only for A, B, D");
    if (b < 2 || k < 1 || block_size(family, b) * k > n) throw PreconditionFailed("inadmissible (n, b, k)");
    if (family == 'A') {
        const int rest = n - k * b;
        std::string shape = "(S" + std::to_string(k) + ")^" + std::to_string(b);
        if (rest > 0) shape += " x S" + std::to_string(rest);
        return {shape, b * k * (k - 1) + rest * (rest - 1)};
    }
    // degenerate witness: all alphas equal
    std::vector<CycloNum> alphas(k, CycloNum(1, Rational(1)));
    ClassicalWitness w = signed_witness('B', n, b, k, alphas);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (family == 'B' && w.vector[i].is_zero()) count += 2;
        for (int j = i + 1; j < n; ++j) {
            if (w.vector[i] == w.vector[j]) count += 2;
            if (w.vector[i] == -w.vector[j]) count += 2;
        }
    }
    const int m = block_size(family, b), rest = n - m * k;
    std::string shape = "(S" + std::to_string(k) + ")^" + std::to_string(m);
    if (rest > 0) shape += std::string(" x ") + family + std::to_string(rest);
    return {shape, count};
}

CycloPoly witness_polynomial(const ClassicalWitness& w) {
    const CycloField& f = w.vector.front().field();
    CycloPoly p{CycloNum(f, Rational(1))};
    for (const auto& x : w.vector) {
        // multiply by X - x (A) or X^2 - x^2 (B, D)
        const std::size_t step = w.label.family == 'A' ? 1 : 2;
        CycloNum c = step == 1 ? x : x * x;
        CycloPoly q(p.size() + step, CycloNum(f));
        for (std::size_t d = 0; d < p.size(); ++d) {
            q[d + step] += p[d];
            q[d] -= c * p[d];
        }
        p = std::move(q);
    }
    return p;
}

std::optional<std::vector<CycloNum>> sparse_coefficients(const CycloPoly& p, int b) {
    if (p.empty() || !p.back().is_one() || b < 1) return std::nullopt;
    const int m = static_cast<int>(p.size()) - 1;
    // lowest nonzero degree must be m - bk
    int low = 0;
    while (low < m && p[low].is_zero()) ++low;
    if ((m - low) % b) return std::nullopt;
    for (int d = low; d < m; ++d)
        if ((m - d) % b && !p[d].is_zero()) return std::nullopt;
    std::vector<CycloNum> a;
    for (int d = m - b; d >= low; d -= b) a.push_back(p[d]);
    return a;
}

}  // namespace refl
