#include "refl/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>

#include "refl/error.hpp"

namespace refl {
namespace {

std::string vector_key(std::span<const CycloNum> v) {
    std::string k;
    for (const auto& x : v) x.append_key(k);
    return k;
}

// -cos(pi/m) = -(zeta_2m + zeta_2m^{-1})/2
CycloNum neg_cos_pi_over(int m, int L) {
    if (m == 3) return CycloNum(L, Rational(-1, 2));
    CycloNum z = CycloNum::zeta_in(L, 2 * m, 1);
    CycloNum zi = CycloNum::zeta_in(L, 2 * m, -1);
    return (z + zi) * Rational(-1, 2);
}

struct Diagram {
    std::vector<std::vector<int>> coxeter;
    int conductor = 1;
    Matrix gram;
};

Diagram make_diagram(const TypeLabel& t) {
    const int n = t.n;
    Diagram d;
    d.coxeter.assign(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) d.coxeter[i][i] = 1;
    auto edge = [&](int i, int j, int m) { d.coxeter[i][j] = d.coxeter[j][i] = m; };
    switch (t.family) {
        case 'A':
        case 'B':
        case 'F':
        case 'H':
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
            if (t.family == 'B') edge(n - 2, n - 1, 4);
            if (t.family == 'F') edge(1, 2, 4);
            if (t.family == 'H') edge(0, 1, 5);
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
            edge(n - 3, n - 1, 3);
            break;
        case 'E':
            edge(0, 2, 3);
            edge(2, 3, 3);
            edge(3, 4, 3);
            edge(4, 5, 3);
            edge(1, 3, 3);
            if (n == 7) edge(5, 6, 3);
            break;
        case 'G':
            edge(0, 1, 6);
            break;
        case 'I':
            edge(0, 1, t.m);
            break;
        default:
            throw UnsupportedType("unknown family");
    }
    if (t.family == 'H') d.conductor = normalize_conductor(10);
    if (t.family == 'I') d.conductor = normalize_conductor(2 * t.m);
    const CycloField& f = CycloField::get(d.conductor);
    d.gram = Matrix(f, n, n);
    if (t.crystallographic()) {
        // Squared lengths: short roots 1, long roots 2 (B, F) or 3 (G); simply laced 1.
        std::vector<Rational> len2(n, Rational(1));
        if (t.family == 'B')
            for (int i = 0; i + 1 < n; ++i) len2[i] = Rational(2);
        if (t.family == 'F') len2[0] = len2[1] = Rational(2);
        if (t.family == 'G') len2[1] = Rational(3);
        for (int i = 0; i < n; ++i) {
            d.gram(i, i) = CycloNum(f, len2[i]);
            for (int j = 0; j < n; ++j) {
                if (i == j || d.coxeter[i][j] == 2) continue;
                // -cos(pi/m) |a_i| |a_j|, rational for m in {3, 4, 6} with these lengths
                Rational v;
                int m = d.coxeter[i][j];
                if (m == 3) v = Rational(-1, 2) * len2[i];
                if (m == 4) v = Rational(-1);
                if (m == 6) v = Rational(-3, 2);
                d.gram(i, j) = CycloNum(f, v);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            d.gram(i, i) = CycloNum(f, Rational(1));
            for (int j = 0; j < n; ++j)
                if (i != j && d.coxeter[i][j] != 2) d.gram(i, j) = neg_cos_pi_over(d.coxeter[i][j], d.conductor);
        }
    }
    return d;
}

}  // namespace

TypeLabel TypeLabel::make(char family, int n, int m) {
    TypeLabel t{family, n, family == 'I' ? m : 0};
    bool ok = false;
    switch (family) {
        case 'A': ok = n >= 1; break;
        case 'B': ok = n >= 2; break;
        case 'D': ok = n >= 4; break;
        case 'E': ok = n == 6 || n == 7; break;
        case 'F': ok = n == 4; break;
        case 'G': ok = n == 2; break;
        case 'H': ok = n == 3 || n == 4; break;
        case 'I': ok = n == 2 && m >= 3; break;
        default: ok = false;
    }
    if (!ok) throw UnsupportedType("unsupported type " + t.str());
    return t;
}

TypeLabel TypeLabel::parse(const std::string& text) {
    static const std::regex plain(R"(^\s*([ABDEFGH])(\d{1,4})\s*$)");
    static const std::regex dihedral(R"(^\s*I2\((\d{1,6})\)\s*$)");
    std::smatch mt;
    if (std::regex_match(text, mt, dihedral)) return make('I', 2, std::stoi(mt[1]));
    if (std::regex_match(text, mt, plain)) return make(mt[1].str()[0], std::stoi(mt[2]));
    throw UnsupportedType("cannot parse type label '" + text + "'");
}

std::string TypeLabel::str() const {
    if (family == 'I') return "I2(" + std::to_string(m) + ")";
    return std::string(1, family) + std::to_string(n);
}

bool TypeLabel::crystallographic() const { return family != 'H' && family != 'I'; }

GroupFacts group_facts(const TypeLabel& t) {
    TypeLabel v = TypeLabel::make(t.family, t.n, t.m);
    std::vector<int> deg;
    const int n = v.n;
    switch (v.family) {
        case 'A':
            for (int i = 2; i <= n + 1; ++i) deg.push_back(i);
            break;
        case 'B':
            for (int i = 1; i <= n; ++i) deg.push_back(2 * i);
            break;
        case 'D':
            for (int i = 1; i < n; ++i) deg.push_back(2 * i);
            deg.push_back(n);
            break;
        case 'E':
            deg = n == 6 ? std::vector<int>{2, 5, 6, 8, 9, 12} : std::vector<int>{2, 6, 8, 10, 12, 14, 18};
            break;
        case 'F': deg = {2, 6, 8, 12}; break;
        case 'G': deg = {2, 6}; break;
        case 'H': deg = n == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30}; break;
        case 'I': deg = {2, v.m}; break;
    }
    std::sort(deg.begin(), deg.end());
    GroupFacts f;
    f.degrees = deg;
    f.coxeter_number = deg.back();
    f.order = 1;
    f.num_roots = 0;
    for (int d : deg) {
        f.order *= static_cast<std::uint64_t>(d);
        f.num_roots += 2 * (d - 1);
    }
    return f;
}

RootSystem RootSystem::build(const TypeLabel& label) {
    RootSystem rs;
    rs.label_ = TypeLabel::make(label.family, label.n, label.m);
    rs.rank_ = rs.label_.n;
    rs.facts_ = group_facts(rs.label_);
    Diagram d = make_diagram(rs.label_);
    rs.coxeter_ = d.coxeter;
    rs.gram_ = d.gram;
    const CycloField& f = rs.gram_.field();
    const int n = rs.rank_;

    auto add_pair = [&rs](Vector v) {
        Vector neg;
        for (const auto& x : v) neg.push_back(-x);
        auto idx = static_cast<RootIndex>(rs.roots_.size());
        rs.index_.emplace(vector_key(v), idx);
        rs.index_.emplace(vector_key(neg), static_cast<RootIndex>(idx + 1));
        rs.roots_.push_back(std::move(v));
        rs.roots_.push_back(std::move(neg));
        return idx;
    };
    // s_i(v) only changes coordinate i: v_i -= 2 B(a_i, v) / B(a_i, a_i).
    auto simple_reflect = [&](const Vector& v, int i) {
        CycloNum pair = dot(rs.gram_.row(i), v);
        Vector w = v;
        w[i] -= pair * Rational(2) * rs.gram_(i, i).inverse();
        return w;
    };

    std::deque<RootIndex> queue;
    for (int i = 0; i < n; ++i) {
        Vector e(n, CycloNum(f));
        e[i] = CycloNum(f, Rational(1));
        queue.push_back(add_pair(std::move(e)));
    }
    while (!queue.empty()) {
        RootIndex r = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            Vector w = simple_reflect(rs.roots_[r], i);
            if (rs.index_.count(vector_key(w))) continue;
            queue.push_back(add_pair(std::move(w)));
        }
        if (rs.roots_.size() > 256) throw Error("root generation exceeded 256 roots");
    }
    if (static_cast<int>(rs.roots_.size()) != rs.facts_.num_roots ||
        static_cast<int>(rs.roots_.size()) != n * rs.facts_.coxeter_number)
        throw Error("root count mismatch for " + rs.label_.str());

    for (const auto& r : rs.roots_) {
        Vector fr(n, CycloNum(f));
        for (int j = 0; j < n; ++j) fr[j] = dot(r, rs.gram_.column(j));
        rs.functionals_.push_back(std::move(fr));
    }
    for (int i = 0; i < n; ++i) {
        Permutation p(rs.roots_.size());
        for (std::size_t r = 0; r < rs.roots_.size(); ++r) {
            int j = rs.root_index(simple_reflect(rs.roots_[r], i));
            if (j < 0) throw Error("root set not closed under simple reflections");
            p[r] = static_cast<RootIndex>(j);
        }
        rs.simple_perm_.push_back(std::move(p));
    }
    for (std::size_t k = 0; k < rs.num_pairs(); ++k) {
        Matrix s = reflection_matrix(rs, 2 * k);
        Permutation p(rs.roots_.size());
        for (std::size_t r = 0; r < rs.roots_.size(); ++r) {
            int j = rs.root_index(mat_vec(s, rs.roots_[r]));
            if (j < 0) throw Error("root set not closed under reflections");
            p[r] = static_cast<RootIndex>(j);
        }
        rs.reflection_perm_.push_back(std::move(p));
    }
    return rs;
}

CycloNum RootSystem::form(std::span<const CycloNum> u, std::span<const CycloNum> v) const {
    return dot(u, mat_vec(gram_, v));
}

int RootSystem::root_index(std::span<const CycloNum> v) const {
    auto it = index_.find(vector_key(v));
    return it == index_.end() ? -1 : it->second;
}

LiftedRoots RootSystem::lifted(int L) const {
    LiftedRoots out;
    out.field = &CycloField::get(common_conductor(L, base_conductor()));
    const int target = out.field->conductor();
    for (const auto& r : roots_) out.roots.push_back(lift(std::span<const CycloNum>(r), target));
    for (const auto& f : functionals_) out.functionals.push_back(lift(std::span<const CycloNum>(f), target));
    return out;
}

Matrix reflection_matrix(const RootSystem& rs, std::size_t alpha) {
    const int n = rs.rank();
    const Vector& a = rs.root(alpha);
    const Vector& fa = rs.functional(alpha);
    CycloNum scale = dot(fa, a).inverse() * Rational(2);
    Matrix m = Matrix::identity(rs.base_field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!a[i].is_zero() && !fa[j].is_zero()) m(i, j) -= scale * a[i] * fa[j];
    return m;
}

std::size_t subset_rank(const RootSystem& rs, const RootSubset& s) {
    Matrix rows(rs.base_field(), 0, rs.rank());
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        if (s.test(i)) rows.append_row(rs.root(i));
    return rref(rows).rank;
}

RootSubset subsystem_closure(const RootSystem& rs, const RootSubset& s) {
    Matrix rows(rs.base_field(), 0, rs.rank());
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        if (s.test(i)) rows.append_row(rs.root(i));
    Subspace span = Subspace::span(rows);
    RootSubset out;
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        if (span.contains(rs.root(i))) out.set(i);
    return out;
}

RootSubset standard_parabolic(const RootSystem& rs, unsigned mask) {
    RootSubset s;
    for (int i = 0; i < rs.rank(); ++i)
        if (mask & (1u << i)) s.set(2 * static_cast<std::size_t>(i));
    return subsystem_closure(rs, s);
}

std::vector<TypeLabel> parabolic_components(const RootSystem& rs, unsigned mask) {
    const int n = rs.rank();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (!(mask & (1u << s)) || comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = static_cast<int>(parts.size());
        for (std::size_t q = 0; q < nodes.size(); ++q)
            for (int j = 0; j < n; ++j)
                if ((mask & (1u << j)) && comp[j] < 0 && rs.coxeter_entry(nodes[q], j) > 2) {
                    comp[j] = comp[s];
                    nodes.push_back(j);
                }
        parts.push_back(nodes);
    }
    std::vector<TypeLabel> out;
    for (const auto& nodes : parts) {
        const int k = static_cast<int>(nodes.size());
        if (k == 1) {
            out.push_back(TypeLabel::make('A', 1));
            continue;
        }
        int max_m = 0, branch = -1;
        std::vector<int> deg(k, 0);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                int m = a == b ? 1 : rs.coxeter_entry(nodes[a], nodes[b]);
                if (m > 2) {
                    ++deg[a];
                    max_m = std::max(max_m, m);
                }
            }
        for (int a = 0; a < k; ++a)
            if (deg[a] >= 3) branch = a;
        if (k == 2) {
            if (max_m == 3) out.push_back(TypeLabel::make('A', 2));
            else if (max_m == 4) out.push_back(TypeLabel::make('B', 2));
            else if (max_m == 6) out.push_back(TypeLabel::make('G', 2));
            else out.push_back(TypeLabel::make('I', 2, max_m));
            continue;
        }
        if (max_m == 3 && branch < 0) {
            out.push_back(TypeLabel::make('A', k));
        } else if (max_m == 3) {
            // arm lengths from the branch node
            std::vector<int> arms;
            for (int a = 0; a < k; ++a) {
                if (a == branch || rs.coxeter_entry(nodes[branch], nodes[a]) <= 2) continue;
                int len = 1, prev = branch, cur = a;
                for (;;) {
                    int next = -1;
                    for (int b = 0; b < k; ++b)
                        if (b != prev && b != cur && rs.coxeter_entry(nodes[cur], nodes[b]) > 2) next = b;
                    if (next < 0) break;
                    prev = cur;
                    cur = next;
                    ++len;
                }
                arms.push_back(len);
            }
            std::sort(arms.begin(), arms.end());
            if (arms[0] == 1 && arms[1] == 1) out.push_back(TypeLabel::make('D', k));
            else if (arms[0] == 1 && arms[1] == 2 && (arms[2] == 2 || arms[2] == 3)) out.push_back(TypeLabel::make('E', k));
            else throw UnsupportedType("unrecognized simply-laced subdiagram");
        } else if (max_m == 4) {
            // B_k has the 4-edge at an end of the chain, F4 in the middle
            bool at_end = false;
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    if (rs.coxeter_entry(nodes[a], nodes[b]) == 4 && (deg[a] == 1 || deg[b] == 1)) at_end = true;
            out.push_back(at_end ? TypeLabel::make('B', k) : TypeLabel::make('F', 4));
        } else if (max_m == 5) {
            out.push_back(TypeLabel::make('H', k));
        } else {
            throw UnsupportedType("unrecognized subdiagram");
        }
    }
    return out;
}

std::vector<int> parabolic_degrees(const RootSystem& rs, unsigned mask) {
    std::vector<int> out;
    for (const auto& t : parabolic_components(rs, mask)) {
        auto f = group_facts(t);
        out.insert(out.end(), f.degrees.begin(), f.degrees.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string components_str(const std::vector<TypeLabel>& parts) {
    if (parts.empty()) return "1";
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(p.str());
    std::sort(names.begin(), names.end());
    std::string s;
    for (const auto& nm : names) s += (s.empty() ? "" : "x") + nm;
    return s;
}

}  // namespace refl
