#include "refl/eigenstab.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "refl/error.hpp"

namespace refl {
namespace {

// acc += x * c, using the cheaper scalar product when c is rational.
void add_product(CycloNum& acc, const CycloNum& x, const CycloNum& c) {
    if (x.is_zero() || c.is_zero()) return;
    if (c.is_rational()) acc += x * c.rational_part();
    else acc += x * c;
}

Vector lifted_point(const RootSystem& rs, std::span<const CycloNum> x, int extra = 1) {
    if (x.size() != static_cast<std::size_t>(rs.rank())) throw DimensionMismatch("point length differs from rank");
    int L = common_conductor(rs.base_conductor(), extra);
    for (const auto& c : x) L = common_conductor(L, c.conductor());
    Vector v = lift(x, L);
    if (is_zero(v)) throw ZeroVector();
    return v;
}

// Values of the functional of each unknown pair on the rows of a basis.
struct Restriction {
    PairSet zero;
    std::vector<std::pair<std::size_t, Vector>> nonzero;
};

Restriction restrict_functionals(const LiftedRoots& lr, const Matrix& basis, const PairSet& known) {
    Restriction out;
    out.zero = known;
    const std::size_t k = basis.rows(), n = basis.cols();
    const std::size_t pairs = lr.roots.size() / 2;
    for (std::size_t p = 0; p < pairs; ++p) {
        if (known.test(p)) continue;
        const Vector& f = lr.functionals[2 * p];
        Vector vals(k, CycloNum(*lr.field));
        bool zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) add_product(vals[i], basis(i, j), f[j]);
            zero = zero && vals[i].is_zero();
        }
        if (zero) out.zero.set(p);
        else out.nonzero.emplace_back(p, std::move(vals));
    }
    return out;
}

class FlatMemo {
public:
    bool insert(const std::string& key) {
        auto& s = shards_[std::hash<std::string>{}(key) % kShards];
        std::lock_guard lock(s.mu);
        return s.keys.insert(key).second;
    }
    [[nodiscard]] std::size_t size() const {
        std::size_t n = 0;
        for (const auto& s : shards_) n += s.keys.size();
        return n;
    }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        std::mutex mu;
        std::unordered_set<std::string> keys;
    };
    std::array<Shard, kShards> shards_;
};

using FlatVisitor = std::function<void(const Subspace&, const PairSet&)>;

// Depth-first walk over the flats below f. `known` lists pairs already
// known to vanish on f. Only flats newly inserted into memo are expanded.
void walk(const LiftedRoots& lr, const Subspace& f, const PairSet& known, FlatMemo& memo, const FlatVisitor& visit) {
    Restriction r = restrict_functionals(lr, f.basis(), known);
    visit(f, r.zero);
    if (f.dim() <= 1) return;
    const Matrix& basis = f.basis();
    // hyperplanes with parallel restrictions cut out the same child
    std::unordered_map<std::string, std::size_t> class_of;
    std::vector<std::pair<Vector, PairSet>> classes;
    for (auto& [p, vals] : r.nonzero) {
        std::size_t j = 0;
        while (vals[j].is_zero()) ++j;
        CycloNum inv = vals[j].inverse();
        std::string key;
        for (auto& v : vals) {
            v *= inv;
            v.append_key(key);
        }
        auto [it, fresh] = class_of.emplace(std::move(key), classes.size());
        if (fresh) classes.emplace_back(std::move(vals), PairSet{});
        classes[it->second].second.set(p);
    }
    for (auto& [vals, members] : classes) {
        std::size_t j = 0;
        while (vals[j].is_zero()) ++j;
        Matrix rows(*lr.field, 0, basis.cols());
        for (std::size_t i = 0; i < basis.rows(); ++i) {
            if (i == j) continue;
            Vector row = basis.row_vector(i);
            if (!vals[i].is_zero())
                for (std::size_t c = 0; c < row.size(); ++c)
                    if (!basis(j, c).is_zero()) row[c] -= vals[i] * basis(j, c);
            rows.append_row(row);
        }
        Subspace child = Subspace::span(rows);
        if (memo.insert(child.key())) walk(lr, child, r.zero | members, memo, visit);
    }
}

struct Best {
    std::size_t count = 0;
    std::optional<Subspace> flat;
    PairSet pairs;

    void offer(const Subspace& f, const PairSet& zero) {
        std::size_t c = zero.count();
        if (flat && (c < count || (c == count && f.key() >= flat->key()))) return;
        count = c;
        flat = f;
        pairs = zero;
    }
    void merge(const Best& o) {
        if (o.flat) offer(*o.flat, o.pairs);
    }
};

void for_each_parallel(std::size_t count, unsigned workers, const std::function<void(std::size_t, unsigned)>& job) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&](unsigned id) {
        try {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) job(i, id);
        } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
            next = count;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

RootSubset roots_of(const PairSet& pairs) {
    RootSubset s;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (pairs.test(p)) {
            s.set(2 * p);
            s.set(2 * p + 1);
        }
    return s;
}

int eigen_conductor(const RootSystem& rs, int b) {
    if (b < 1) throw PreconditionFailed("b must be positive");
    return common_conductor(rs.base_conductor(), b);
}

Subspace eigenspace(const RootSystem& rs, const Matrix& w, int b) {
    const int L = eigen_conductor(rs, b);
    Matrix m = w.lifted(L);
    CycloNum z = CycloNum::zeta_in(L, b, 1);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= z;
    return kernel(m);
}

RootSubset orthogonal_roots(const RootSystem& rs, const Subspace& e) {
    LiftedRoots lr = rs.lifted(e.field().conductor());
    Matrix basis = e.basis().lifted(lr.field->conductor());
    return roots_of(restrict_functionals(lr, basis, {}).zero);
}

RootSubset orthogonal_roots(const RootSystem& rs, std::span<const CycloNum> x) {
    Vector v = lifted_point(rs, x);
    LiftedRoots lr = rs.lifted(v.front().conductor());
    Matrix row(*lr.field, 0, v.size());
    row.append_row(v);
    return roots_of(restrict_functionals(lr, row, {}).zero);
}

StabilizerReport N_of(const RootSystem& rs, std::span<const CycloNum> x) {
    StabilizerReport r;
    r.phi_x = orthogonal_roots(rs, x);
    r.N = static_cast<int>(rs.num_roots() - r.phi_x.count());
    return r;
}

StabilizerReport stabilizer(const RootSystem& rs, const GroupEnumeration& g, std::span<const CycloNum> x) {
    Vector v = lifted_point(rs, x);
    StabilizerReport r = N_of(rs, v);
    LiftedRoots lr = rs.lifted(v.front().conductor());
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.act(i, lr, v) == v) ++r.group_order;
    std::vector<std::size_t> pairs;
    for (std::size_t p = 0; p < rs.num_pairs(); ++p)
        if (r.phi_x.test(2 * p)) pairs.push_back(p);
    r.reflection_subgroup_order = reflection_subgroup_order(rs, pairs);

    const std::size_t target = r.phi_x.count();
    const unsigned full = (1u << rs.rank()) - 1;
    for (unsigned mask = 0; mask <= full && !r.parabolic_witness; ++mask) {
        RootSubset std_roots = standard_parabolic(rs, mask);
        if (std_roots.count() != target) continue;
        for (std::size_t i = 0; i < g.order(); ++i) {
            auto img = g.images(i);
            bool inside = true;
            for (int s = 0; s < rs.rank() && inside; ++s)
                if (mask & (1u << s)) inside = r.phi_x.test(img[s]);
            if (!inside) continue;
            Permutation perm = g.root_permutation(i);
            RootSubset moved;
            for (std::size_t a = 0; a < rs.num_roots(); ++a)
                if (std_roots.test(a)) moved.set(perm[a]);
            if (moved != r.phi_x) continue;
            r.parabolic_witness = ParabolicWitness{i, mask, components_str(parabolic_components(rs, mask))};
            break;
        }
    }
    return r;
}

std::vector<Flat> flats_of(const RootSystem& rs, const Subspace& e) {
    if (e.is_zero()) throw EmptyEigenspace();
    LiftedRoots lr = rs.lifted(e.field().conductor());
    Subspace top = Subspace::span(e.basis().lifted(lr.field->conductor()));
    FlatMemo memo;
    memo.insert(top.key());
    std::vector<Flat> out;
    walk(lr, top, {}, memo, [&](const Subspace& f, const PairSet& zero) { out.push_back({f, roots_of(zero)}); });
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) { return a.space.key() < b.space.key(); });
    return out;
}

FlatMinimum min_N_over_eigenspace(const RootSystem& rs, const Subspace& e) {
    if (e.is_zero()) throw EmptyEigenspace();
    LiftedRoots lr = rs.lifted(e.field().conductor());
    Subspace top = Subspace::span(e.basis().lifted(lr.field->conductor()));
    FlatMemo memo;
    memo.insert(top.key());
    Best best;
    std::size_t visited = 0;
    walk(lr, top, {}, memo, [&](const Subspace& f, const PairSet& zero) {
        ++visited;
        best.offer(f, zero);
    });
    return {static_cast<int>(rs.num_roots() - 2 * best.count), *best.flat, roots_of(best.pairs), visited};
}

bool VerificationRecord::theorem_holds(int coxeter_number) const {
    if (!vb_nonempty) return true;
    return min_N >= bound && (min_N == bound) == (b == coxeter_number);
}

unsigned default_workers() {
    if (const char* env = std::getenv("REFL_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<int> degree_divisors(const RootSystem& rs) {
    std::set<int> out;
    for (int d : rs.degrees())
        for (int b = 1; b <= d; ++b)
            if (d % b == 0) out.insert(b);
    return {out.begin(), out.end()};
}

std::vector<VerificationRecord> verify(const RootSystem& rs, const GroupEnumeration& g, const std::vector<int>& bs,
                                       VerifyOptions opts) {
    for (int b : bs)
        if (b < 1) throw PreconditionFailed("b must be positive");
    const unsigned workers = opts.workers ? opts.workers : default_workers();
    const std::size_t order = g.order();

    // admission bitmask per element, one characteristic polynomial each
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::uint64_t> admits(order, 0);
    if (bs.size() > 64) throw PreconditionFailed("at most 64 values of b per run");
    for_each_parallel(order, workers, [&](std::size_t i, unsigned) {
        CycloPoly p = characteristic_polynomial(g.matrix(i));
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < bs.size(); ++k)
            if (admits_primitive_eigenvalue(p, bs[k])) bits |= std::uint64_t{1} << k;
        admits[i] = bits;
    });
    const double admission_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::vector<VerificationRecord> out;
    for (std::size_t k = 0; k < bs.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        const int b = bs[k];
        VerificationRecord rec;
        rec.label = rs.label();
        rec.b = b;
        rec.rank = rs.rank();
        rec.bound = b * rs.rank();
        rec.elements_scanned = order;
        std::vector<std::size_t> admitted;
        for (std::size_t i = 0; i < order; ++i)
            if (admits[i] >> k & 1) admitted.push_back(i);
        rec.elements_admitting = admitted.size();
        rec.vb_nonempty = !admitted.empty();

        const int L = eigen_conductor(rs, b);
        LiftedRoots lr = rs.lifted(L);
        FlatMemo memo;
        std::vector<Best> best(workers);
        std::vector<std::set<int>> orders(workers);
        for_each_parallel(admitted.size(), workers, [&](std::size_t j, unsigned id) {
            const std::size_t i = admitted[j];
            orders[id].insert(g.element_order(i));
            Subspace e = eigenspace(rs, g.matrix(i), b);
            if (e.is_zero()) throw Error("characteristic polynomial admits zeta_b but the eigenspace is zero");
            if (!memo.insert(e.key())) return;
            walk(lr, e, {}, memo, [&](const Subspace& f, const PairSet& zero) { best[id].offer(f, zero); });
        });
        Best total;
        std::set<int> all_orders;
        for (unsigned w = 0; w < best.size(); ++w) {
            total.merge(best[w]);
            all_orders.insert(orders[w].begin(), orders[w].end());
        }
        rec.admitting_orders.assign(all_orders.begin(), all_orders.end());
        rec.flats_visited = memo.size();
        if (total.flat) {
            rec.min_N = static_cast<int>(rs.num_roots() - 2 * total.count);
            rec.equality = rec.min_N == rec.bound;
            rec.witness_flat = total.flat;
            rec.witness_phi = roots_of(total.pairs);
        }
        rec.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() +
                           admission_ms / static_cast<double>(bs.size());
        out.push_back(std::move(rec));
    }
    return out;
}

VerificationRecord min_N(const RootSystem& rs, const GroupEnumeration& g, int b, VerifyOptions opts) {
    return verify(rs, g, {b}, opts).front();
}

bool check_parabolic_eigenspace_lemma(const RootSystem& rs, const GroupEnumeration& g, unsigned simple_mask, int b) {
    const unsigned full = (1u << rs.rank()) - 1;
    if (b < 2) throw PreconditionFailed("the lemma needs zeta != 1");
    if ((simple_mask & full) == full) throw PreconditionFailed("W_I must be proper");
    for (std::size_t i = 0; i < g.order(); ++i) {
        // reduced words of elements of W_I use only letters from I
        auto word = g.word(i);
        if (!std::all_of(word.begin(), word.end(), [&](int s) { return simple_mask >> s & 1; })) continue;
        Subspace e = eigenspace(rs, g.matrix(i), b);
        for (std::size_t r = 0; r < e.dim(); ++r)
            for (int c = 0; c < rs.rank(); ++c)
                if (!(simple_mask >> c & 1) && !e.basis()(r, c).is_zero()) return false;
    }
    return true;
}

std::vector<ParabolicClass> parabolic_classes(const RootSystem& rs) {
    struct BitsetLess {
        bool operator()(const RootSubset& a, const RootSubset& b) const {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a.test(i) != b.test(i)) return b.test(i);
            return false;
        }
    };
    std::map<RootSubset, std::size_t, BitsetLess> class_of;
    std::vector<ParabolicClass> out;
    const unsigned full = (1u << rs.rank()) - 1;
    for (unsigned mask = 0; mask <= full; ++mask) {
        RootSubset start = standard_parabolic(rs, mask);
        if (class_of.count(start)) continue;
        ParabolicClass c;
        c.mask = mask;
        auto parts = parabolic_components(rs, mask);
        c.type = components_str(parts);
        c.num_roots = start.count();
        c.rank = static_cast<std::size_t>(std::popcount(mask));
        c.degrees = parabolic_degrees(rs, mask);
        std::vector<RootSubset> orbit{start};
        class_of.emplace(start, out.size());
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (int s = 0; s < rs.rank(); ++s) {
                const Permutation& p = rs.simple_permutation(s);
                RootSubset img;
                for (std::size_t a = 0; a < rs.num_roots(); ++a)
                    if (orbit[q].test(a)) img.set(p[a]);
                if (class_of.emplace(img, out.size()).second) orbit.push_back(img);
            }
        std::sort(orbit.begin(), orbit.end(), BitsetLess{});
        c.members = std::move(orbit);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace refl
