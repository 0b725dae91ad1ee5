#include "refl/wgroup.hpp"

#include <numeric>
#include <unordered_set>

#include "refl/error.hpp"

namespace refl {
namespace {

std::uint64_t pack(std::span<const RootIndex> img) {
    std::uint64_t k = 0;
    for (RootIndex r : img) k = (k << 8) | r;
    return k;
}

CycloPoly shift_sub(const CycloPoly& p, const CycloNum& c) {
    // x p - c p
    CycloPoly r(p.size() + 1, CycloNum(c.field()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + 1] += p[i];
        if (!c.is_zero()) r[i] -= c * p[i];
    }
    return r;
}

}  // namespace

GroupEnumeration::GroupEnumeration(const RootSystem& rs, std::vector<RootIndex> images,
                                   std::vector<std::uint32_t> parent, std::vector<std::uint8_t> generator)
    : rs_(&rs), rank_(rs.rank()), images_(std::move(images)), parent_(std::move(parent)),
      generator_(std::move(generator)) {}

Matrix GroupEnumeration::matrix(std::size_t i) const {
    Matrix m(rs_->base_field(), rank_, rank_);
    auto img = images(i);
    for (int c = 0; c < rank_; ++c) {
        const Vector& v = rs_->root(img[c]);
        for (int r = 0; r < rank_; ++r) m(r, c) = v[r];
    }
    return m;
}

std::vector<int> GroupEnumeration::word(std::size_t i) const {
    std::vector<int> w;
    while (i != 0) {
        w.push_back(generator_[i]);
        i = parent_[i];
    }
    return w;
}

Permutation GroupEnumeration::root_permutation(std::size_t i) const {
    Permutation p(rs_->num_roots());
    std::iota(p.begin(), p.end(), RootIndex{0});
    auto w = word(i);
    for (std::size_t j = w.size(); j-- > 0;) {
        const Permutation& s = rs_->simple_permutation(w[j]);
        for (auto& r : p) r = s[r];
    }
    return p;
}

int GroupEnumeration::element_order(std::size_t i) const {
    Permutation p = root_permutation(i);
    std::vector<bool> seen(p.size(), false);
    long long ord = 1;
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        long long len = 0;
        for (std::size_t c = s; !seen[c]; c = p[c]) {
            seen[c] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

Vector GroupEnumeration::act(std::size_t i, const LiftedRoots& roots, std::span<const CycloNum> x) const {
    if (x.size() != static_cast<std::size_t>(rank_)) throw DimensionMismatch("act: vector length differs from rank");
    Vector out(rank_, CycloNum(*roots.field));
    auto img = images(i);
    for (int j = 0; j < rank_; ++j) {
        if (x[j].is_zero()) continue;
        const Vector& v = roots.roots[img[j]];
        for (int r = 0; r < rank_; ++r)
            if (!v[r].is_zero()) out[r] += x[j] * v[r];
    }
    return out;
}

GroupEnumeration enumerate_group(const RootSystem& rs, std::uint64_t cap) {
    const std::uint64_t required = rs.group_order();
    if (required > cap) throw GroupTooLarge(required, cap);
    const int n = rs.rank();
    std::vector<RootIndex> images;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint8_t> gen;
    images.reserve(required * n);
    parent.reserve(required);
    gen.reserve(required);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(required * 2);
    for (int i = 0; i < n; ++i) images.push_back(static_cast<RootIndex>(2 * i));
    parent.push_back(0);
    gen.push_back(0);
    seen.insert(pack({images.data(), static_cast<std::size_t>(n)}));
    std::vector<RootIndex> next(n);
    for (std::size_t e = 0; e < parent.size(); ++e) {
        for (int g = 0; g < n; ++g) {
            const Permutation& s = rs.simple_permutation(g);
            for (int j = 0; j < n; ++j) next[j] = s[images[e * n + j]];
            if (!seen.insert(pack(next)).second) continue;
            images.insert(images.end(), next.begin(), next.end());
            parent.push_back(static_cast<std::uint32_t>(e));
            gen.push_back(static_cast<std::uint8_t>(g));
        }
    }
    return GroupEnumeration(rs, std::move(images), std::move(parent), std::move(gen));
}

CycloPoly characteristic_polynomial(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw DimensionMismatch("characteristic_polynomial: matrix not square");
    const CycloField& f = m.field();
    Matrix h = m;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && h(piv, k - 1).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != k) {
            h.swap_rows(piv, k);
            for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, k));
        }
        CycloNum t_inv = h(k, k - 1).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (h(i, k - 1).is_zero()) continue;
            CycloNum u = h(i, k - 1) * t_inv;
            for (std::size_t j = 0; j < n; ++j)
                if (!h(k, j).is_zero()) h(i, j) -= u * h(k, j);
            for (std::size_t r = 0; r < n; ++r)
                if (!h(r, i).is_zero()) h(r, k) += u * h(r, i);
        }
    }
    std::vector<CycloPoly> p(n + 1);
    p[0] = {CycloNum(f, Rational(1))};
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = shift_sub(p[k - 1], h(k - 1, k - 1));
        CycloNum t(f, Rational(1));
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            if (t.is_zero()) break;
            CycloNum c = t * h(k - i - 1, k - 1);
            if (c.is_zero()) continue;
            const CycloPoly& q = p[k - i - 1];
            for (std::size_t d = 0; d < q.size(); ++d) p[k][d] -= c * q[d];
        }
    }
    return p[n];
}

CycloNum evaluate(const CycloPoly& p, const CycloNum& value) {
    int L = value.conductor();
    for (const auto& c : p) L = common_conductor(L, c.conductor());
    CycloNum v = lift(value, L);
    CycloNum acc(L);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * v + lift(p[i], L);
    return acc;
}

bool admits_primitive_eigenvalue(const CycloPoly& charpoly, int b) {
    if (b < 1) throw PreconditionFailed("b must be positive");
    bool rational = true;
    for (const auto& c : charpoly) rational = rational && c.is_rational();
    if (!rational) return evaluate(charpoly, CycloNum::zeta(b)).is_zero();
    std::vector<Rational> a;
    for (const auto& c : charpoly) a.push_back(c.rational_part());
    IntPoly phi = cyclotomic_polynomial(b);
    if (a.size() < phi.size()) return false;
    // long division by the monic Phi_b
    for (std::size_t i = a.size(); i-- >= phi.size();) {
        Rational f = a[i];
        if (f.is_zero()) continue;
        std::size_t shift = i - (phi.size() - 1);
        for (std::size_t j = 0; j < phi.size(); ++j)
            if (phi[j] != 0) a[shift + j] -= f * Rational(phi[j]);
    }
    for (std::size_t i = 0; i + 1 < phi.size(); ++i)
        if (!a[i].is_zero()) return false;
    return true;
}

bool admits_primitive_eigenvalue(const GroupElement& w, int b) {
    return admits_primitive_eigenvalue(characteristic_polynomial(w.matrix), b);
}

GroupElement coxeter_element(const RootSystem& rs) {
    GroupElement c{Matrix::identity(rs.base_field(), rs.rank()), {}};
    for (int i = 0; i < rs.rank(); ++i) {
        c.matrix = c.matrix * reflection_matrix(rs, 2 * static_cast<std::size_t>(i));
        c.word.push_back(i);
    }
    return c;
}

int matrix_order(const Matrix& m, int limit) {
    Matrix id = Matrix::identity(m.field(), m.rows());
    Matrix p = m;
    for (int k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    throw Error("matrix order exceeds limit");
}

std::uint64_t reflection_subgroup_order(const RootSystem& rs, const std::vector<std::size_t>& pairs,
                                        std::uint64_t cap) {
    const int n = rs.rank();
    std::vector<RootIndex> elems;
    for (int i = 0; i < n; ++i) elems.push_back(static_cast<RootIndex>(2 * i));
    std::unordered_set<std::uint64_t> seen{pack({elems.data(), static_cast<std::size_t>(n)})};
    std::vector<RootIndex> next(n);
    for (std::size_t e = 0; e * n < elems.size(); ++e) {
        for (auto k : pairs) {
            const Permutation& s = rs.reflection_permutation(k);
            for (int j = 0; j < n; ++j) next[j] = s[elems[e * n + j]];
            if (!seen.insert(pack(next)).second) continue;
            elems.insert(elems.end(), next.begin(), next.end());
            if (seen.size() > cap) throw GroupTooLarge(seen.size(), cap);
        }
    }
    return seen.size();
}

}  // namespace refl
