#include "refl/springer.hpp"

#include "refl/eigenstab.hpp"
#include "refl/error.hpp"

namespace refl {
namespace {

int common_of(std::span<const CycloNum> x, int L) {
    for (const auto& c : x) L = common_conductor(L, c.conductor());
    return L;
}

// e_1..e_m of the values, by the usual one-pass recurrence.
std::vector<CycloNum> elementary(const std::vector<CycloNum>& v, const CycloField& f) {
    std::vector<CycloNum> e(v.size() + 1, CycloNum(f));
    e[0] = CycloNum(f, Rational(1));
    for (const auto& x : v)
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * x;
    return e;
}

}  // namespace

InvariantSet invariant_polynomials(const RootSystem& rs) {
    InvariantSet s;
    s.label_ = rs.label();
    s.gram_ = rs.gram();
    const int n = rs.rank();
    const CycloField& q = CycloField::get(1);
    auto one = CycloNum(q, Rational(1));
    switch (rs.label().family) {
        case 'A': {
            s.model_ = Model::SumZero;
            s.embedding_ = Matrix(q, n + 1, n);
            for (int i = 0; i < n; ++i) {
                s.embedding_(i, i) = one;
                s.embedding_(i + 1, i) = -one;
            }
            for (int k = 2; k <= n + 1; ++k) s.degrees_.push_back(k);
            break;
        }
        case 'B':
        case 'D': {
            const bool d = rs.label().family == 'D';
            s.model_ = d ? Model::Even : Model::Signed;
            s.embedding_ = Matrix(q, n, n);
            for (int i = 0; i + 1 < n; ++i) {
                s.embedding_(i, i) = one;
                s.embedding_(i + 1, i) = -one;
            }
            if (d) {
                s.embedding_(n - 2, n - 1) = one;
                s.embedding_(n - 1, n - 1) = one;
            } else {
                s.embedding_(n - 1, n - 1) = one;
            }
            for (int k = 1; k <= (d ? n - 1 : n); ++k) s.degrees_.push_back(2 * k);
            if (d) s.degrees_.push_back(n);
            break;
        }
        default:
            s.model_ = Model::RootBasis;
            s.embedding_ = Matrix::identity(rs.base_field(), n);
            s.degrees_ = {2};
    }
    return s;
}

CycloNum InvariantSet::evaluate(std::size_t i, std::span<const CycloNum> x) const {
    if (x.size() != model_dim()) throw DimensionMismatch("invariant evaluated at a vector of the wrong length");
    if (i >= degrees_.size()) throw PreconditionFailed("invariant index out of range");
    const int L = common_of(x, embedding_.conductor());
    const CycloField& f = CycloField::get(L);
    Vector v = lift(x, L);
    switch (model_) {
        case Model::SumZero: {
            CycloNum acc(f);
            for (const auto& c : v) acc += c.pow(degrees_[i]);
            return acc;
        }
        case Model::Signed:
        case Model::Even: {
            if (model_ == Model::Even && i + 1 == degrees_.size()) {
                CycloNum prod(f, Rational(1));
                for (const auto& c : v) prod *= c;
                return prod;
            }
            std::vector<CycloNum> sq;
            for (const auto& c : v) sq.push_back(c * c);
            return elementary(sq, f)[i + 1];
        }
        case Model::RootBasis:
            break;
    }
    Matrix g = gram_.lifted(L);
    return dot(v, mat_vec(g, v));
}

Vector InvariantSet::to_model(std::span<const CycloNum> root_coords) const {
    if (root_coords.size() != embedding_.cols()) throw DimensionMismatch("root coordinates of the wrong length");
    const int L = common_of(root_coords, embedding_.conductor());
    return mat_vec(embedding_.lifted(L), lift(root_coords, L));
}

Vector InvariantSet::to_root(std::span<const CycloNum> model_coords) const {
    if (model_coords.size() != model_dim()) throw DimensionMismatch("model coordinates of the wrong length");
    const int L = common_of(model_coords, embedding_.conductor());
    const CycloField& f = CycloField::get(L);
    // solve embedding * c = x from the reduced form of [embedding | x]
    const std::size_t n = embedding_.cols();
    Matrix aug(f, model_dim(), n + 1);
    Matrix e = embedding_.lifted(L);
    Vector x = lift(model_coords, L);
    for (std::size_t r = 0; r < model_dim(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = e(r, c);
        aug(r, n) = x[r];
    }
    RrefResult red = rref(aug);
    if (!red.pivots.empty() && red.pivots.back() == n) throw PreconditionFailed("vector is outside the model subspace");
    Vector c(n, CycloNum(f));
    for (std::size_t r = 0; r < red.rank; ++r) c[red.pivots[r]] = red.canonical(r, n);
    return c;
}

CycloNum quadratic_invariant(const RootSystem& rs, std::span<const CycloNum> x) {
    if (x.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("point length differs from rank");
    const int L = common_of(x, rs.base_conductor());
    Vector v = lift(x, L);
    return dot(v, mat_vec(rs.gram().lifted(L), v));
}

bool in_Vb_by_invariants(const InvariantSet& inv, std::span<const CycloNum> x, int b) {
    if (b < 1) throw PreconditionFailed("b must be positive");
    if (!inv.full()) throw QuadraticOnly("no full invariant set for " + inv.label().str());
    for (std::size_t i = 0; i < inv.size(); ++i)
        if (inv.degree(i) % b != 0 && !inv.evaluate(i, x).is_zero()) return false;
    return true;
}

std::optional<std::size_t> in_Vb_by_search(const RootSystem& rs, const GroupEnumeration& g,
                                           std::span<const CycloNum> x, int b) {
    if (x.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("point length differs from rank");
    const int L = common_of(x, eigen_conductor(rs, b));
    LiftedRoots lr = rs.lifted(L);
    Vector v = lift(x, L);
    Vector target = v;
    const CycloNum z = CycloNum::zeta_in(L, b);
    for (auto& c : target) c *= z;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.act(i, lr, v) == target) return i;
    return std::nullopt;
}

bool quadratic_rank_check(const RootSystem& rs, std::span<const CycloNum> x) {
    if (rs.rank() <= 2) throw PreconditionFailed("rank must exceed 2");
    if (!quadratic_invariant(rs, x).is_zero()) throw PreconditionFailed("Q(x) must vanish");
    RootSubset phi = N_of(rs, x).phi_x;
    return subset_rank(rs, phi) + 2 <= static_cast<std::size_t>(rs.rank());
}

}  // namespace refl
