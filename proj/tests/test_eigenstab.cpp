#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "refl/error.hpp"

using namespace refl;

namespace {

const RootSystem& sys(const std::string& name) {
    static std::map<std::string, RootSystem> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, RootSystem::build(TypeLabel::parse(name))).first;
    return it->second;
}

const GroupEnumeration& grp(const std::string& name) {
    static std::map<std::string, GroupEnumeration> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, enumerate_group(sys(name))).first;
    return it->second;
}

Vector rat(std::initializer_list<Rational> c) {
    Vector v;
    for (const auto& x : c) v.emplace_back(1, x);
    return v;
}

}  // namespace

TEST_CASE("eigenspace examples") {
    const auto& a2 = sys("A2");
    CHECK(eigenspace(a2, Matrix::identity(a2.base_field(), 2), 1).dim() == 2);
    CHECK(eigenspace(a2, coxeter_element(a2), 3).dim() == 1);
    CHECK(eigenspace(a2, coxeter_element(a2), 2).dim() == 0);
    Matrix s = reflection_matrix(a2, 4);
    Subspace line = eigenspace(a2, s, 2);
    CHECK(line == Subspace::span(Matrix::from_rows(a2.base_field(), {a2.root(4)}, 2)));
    // admission and eigenspace agree on every element
    for (const char* name : {"B3", "H3", "I2(8)"}) {
        const auto& rs = sys(name);
        const auto& g = grp(name);
        for (std::size_t i = 0; i < g.order(); ++i) {
            CycloPoly p = characteristic_polynomial(g.matrix(i));
            for (int b : {1, 2, 3, 4, 5, 6, 8, 10}) REQUIRE(admits_primitive_eigenvalue(p, b) == !eigenspace(rs, g.matrix(i), b).is_zero());
        }
    }
}

TEST_CASE("orthogonal roots examples") {
    const auto& a2 = sys("A2");
    CHECK(orthogonal_roots(a2, Subspace::full(a2.base_field(), 2)).none());
    CHECK(orthogonal_roots(a2, Subspace(a2.base_field(), 2)).count() == 6);
    CHECK(orthogonal_roots(a2, eigenspace(a2, coxeter_element(a2), 3)).none());
}

TEST_CASE("N_of examples") {
    const auto& a3 = sys("A3");
    // c(e1 - e2) in the model is c alpha_1
    auto r = N_of(a3, rat({Rational(5, 3), 0, 0}));
    CHECK(r.phi_x.count() == 2);
    CHECK(r.N == 10);
    Subspace cox = eigenspace(a3, coxeter_element(a3), 4);
    CHECK(N_of(a3, cox.basis().row(0)).N == 12);
    // orthogonal to alpha_1 only: B(alpha_1, x) = 0 for x = alpha_1 + 2 alpha_2 ... choose x = (1, 2, 0): pairs 1 - 1 = 0 with alpha_1
    auto wall = N_of(a3, rat({1, 2, 7}));
    CHECK(wall.phi_x.count() == 2);
    CHECK(wall.N == 10);
    CHECK(wall.phi_x.test(0));
    CHECK_THROWS_AS(N_of(a3, rat({0, 0, 0})), ZeroVector);
    CHECK_THROWS_AS(N_of(a3, rat({1, 0})), DimensionMismatch);
}

TEST_CASE("stabilizer examples") {
    const auto& a3 = sys("A3");
    const auto& g = grp("A3");
    Subspace cox = eigenspace(a3, coxeter_element(a3), 4);
    auto reg = stabilizer(a3, g, cox.basis().row(0));
    CHECK(reg.group_order == 1);
    CHECK(reg.generated_by_reflections());
    REQUIRE(reg.parabolic_witness);
    CHECK(reg.parabolic_witness->type == "1");

    auto s = stabilizer(a3, g, rat({1, 0, 0}));
    CHECK(s.group_order == 2);
    CHECK(s.reflection_subgroup_order == 2);
    REQUIRE(s.parabolic_witness);
    CHECK(s.parabolic_witness->type == "A1");
    CHECK_THROWS_AS(stabilizer(a3, g, rat({0, 0, 0})), ZeroVector);

    // a point of the E6 line fixed by a D5 parabolic
    const auto& e6 = sys("E6");
    Vector x(6, CycloNum(1));
    Matrix cons(e6.base_field(), 0, 6);
    for (int i = 0; i < 5; ++i) cons.append_row(e6.functional(2 * i));
    Subspace line = kernel(cons);
    auto d5 = stabilizer(e6, grp("E6"), line.basis().row(0));
    CHECK(d5.group_order == 1920);
    CHECK(d5.generated_by_reflections());
    REQUIRE(d5.parabolic_witness);
    CHECK(d5.parabolic_witness->type == "D5");
}

TEST_CASE("min_N over an eigenspace, examples") {
    const auto& a2 = sys("A2");
    CHECK(min_N_over_eigenspace(a2, eigenspace(a2, coxeter_element(a2), 3)).min_N == 6);
    auto full = min_N_over_eigenspace(a2, Subspace::full(a2.base_field(), 2));
    CHECK(full.min_N == 4);
    CHECK(full.witness_phi.count() == 2);
    CHECK(full.witness_flat.dim() == 1);
    CHECK_THROWS_AS(min_N_over_eigenspace(a2, Subspace(a2.base_field(), 2)), EmptyEigenspace);

    auto e6 = min_N(sys("E6"), grp("E6"), 6, {1});
    CHECK(e6.vb_nonempty);
    CHECK(e6.min_N >= 48);
}

TEST_CASE("min_N records for A2") {
    const auto& a2 = sys("A2");
    const auto& g = grp("A2");
    auto r3 = min_N(a2, g, 3);
    CHECK(r3.min_N == 6);
    CHECK(r3.equality);
    CHECK(r3.theorem_holds(3));
    auto r2 = min_N(a2, g, 2);
    CHECK(r2.min_N == 6);
    CHECK(r2.bound == 4);
    CHECK_FALSE(r2.equality);
    CHECK(r2.elements_admitting == 3);
    auto r4 = min_N(a2, g, 4);
    CHECK_FALSE(r4.vb_nonempty);
    CHECK(r4.theorem_holds(3));
    CHECK(r4.elements_scanned == 6);
}

TEST_CASE("V(b) is empty exactly when b divides no degree") {
    for (const char* name : {"A3", "B3", "D4", "G2", "H3", "I2(7)", "F4"}) {
        CAPTURE(name);
        const auto& rs = sys(name);
        std::vector<int> bs;
        for (int b = 1; b <= rs.coxeter_number() + 2; ++b) bs.push_back(b);
        auto divisors = degree_divisors(rs);
        for (const auto& r : verify(rs, grp(name), bs, {1})) {
            CAPTURE(r.b);
            REQUIRE(r.vb_nonempty == std::binary_search(divisors.begin(), divisors.end(), r.b));
            REQUIRE(r.theorem_holds(rs.coxeter_number()));
        }
    }
}

TEST_CASE("flat recursion matches the naive fixpoint") {
    for (const char* name : {"A2", "A3", "B2", "B3", "G2", "I2(5)", "I2(8)", "H3"}) {
        CAPTURE(name);
        const auto& rs = sys(name);
        const auto& g = grp(name);
        for (int b : degree_divisors(rs)) {
            CAPTURE(b);
            for (std::size_t i = 0; i < g.order(); ++i) {
                Subspace e = eigenspace(rs, g.matrix(i), b);
                if (e.is_zero()) continue;
                auto naive = testing::naive_flats(rs, e);
                auto fast = flats_of(rs, e);
                REQUIRE(fast.size() == naive.size());
                std::size_t best = 0;
                for (const auto& f : fast) {
                    REQUIRE(naive.count(f.space.key()) == 1);
                    REQUIRE(f.orthogonal == orthogonal_roots(rs, f.space));
                    best = std::max(best, f.orthogonal.count());
                }
                REQUIRE(min_N_over_eigenspace(rs, e).min_N == static_cast<int>(rs.num_roots() - best));
            }
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    for (const char* name : {"B4", "H3", "D4"}) {
        const auto& rs = sys(name);
        auto one = verify(rs, grp(name), degree_divisors(rs), {1});
        auto many = verify(rs, grp(name), degree_divisors(rs), {4});
        REQUIRE(one.size() == many.size());
        for (std::size_t k = 0; k < one.size(); ++k) {
            CHECK(one[k].min_N == many[k].min_N);
            CHECK(one[k].witness_flat->key() == many[k].witness_flat->key());
            CHECK(one[k].witness_phi == many[k].witness_phi);
            CHECK(one[k].flats_visited == many[k].flats_visited);
            CHECK(one[k].admitting_orders == many[k].admitting_orders);
        }
    }
}

TEST_CASE("parabolic eigenspace lemma") {
    const auto& a3 = sys("A3");
    const auto& g = grp("A3");
    CHECK(check_parabolic_eigenspace_lemma(a3, g, 0b011, 3));
    CHECK(check_parabolic_eigenspace_lemma(a3, g, 0b001, 2));
    CHECK_THROWS_AS(check_parabolic_eigenspace_lemma(a3, g, 0b011, 1), PreconditionFailed);
    CHECK_THROWS_AS(check_parabolic_eigenspace_lemma(a3, g, 0b111, 2), PreconditionFailed);
    // the A2 Coxeter eigenline sits in span(alpha_1, alpha_2)
    Matrix c = reflection_matrix(a3, 0) * reflection_matrix(a3, 2);
    Subspace line = eigenspace(a3, c, 3);
    REQUIRE(line.dim() == 1);
    CHECK(line.basis()(0, 2).is_zero());
    for (const char* name : {"A4", "B3", "D4", "H3", "F4"}) {
        CAPTURE(name);
        const auto& rs = sys(name);
        const unsigned full = (1u << rs.rank()) - 1;
        for (unsigned mask = 0; mask < full; ++mask)
            for (int b = 2; b <= rs.coxeter_number(); ++b) REQUIRE(check_parabolic_eigenspace_lemma(rs, grp(name), mask, b));
    }
}

TEST_CASE("Kostant: eigenvectors for b = h are regular") {
    for (const char* name : {"A4", "B4", "D5", "F4", "H3", "H4", "I2(9)"}) {
        CAPTURE(name);
        const auto& rs = sys(name);
        auto r = min_N(rs, grp(name), rs.coxeter_number());
        CHECK(r.min_N == static_cast<int>(rs.num_roots()));
        CHECK(r.witness_phi.none());
        CHECK(r.admitting_orders == std::vector<int>{rs.coxeter_number()});
    }
}

TEST_CASE("nonregular flats lie in a parabolic eigenspace whose degrees b divides") {
    for (const char* name : {"A3", "B3", "H3", "A4", "B4", "D4", "F4"}) {
        CAPTURE(name);
        const auto& rs = sys(name);
        const auto& g = grp(name);
        std::map<std::string, const ParabolicClass*> class_of;
        auto classes = parabolic_classes(rs);
        for (const auto& c : classes)
            for (const auto& m : c.members) class_of[m.to_string()] = &c;
        std::vector<Subspace> fixed;
        for (std::size_t i = 0; i < g.order(); ++i) fixed.push_back(eigenspace(rs, g.matrix(i), 1));
        for (int b : degree_divisors(rs)) {
            if (b == 1) continue;
            CAPTURE(b);
            const int L = eigen_conductor(rs, b);
            LiftedRoots lr = rs.lifted(L);
            const CycloNum z = CycloNum::zeta_in(L, b);
            std::set<std::string> seen_e, seen_f;
            for (std::size_t i = 0; i < g.order(); ++i) {
                Subspace e = eigenspace(rs, g.matrix(i), b);
                if (e.is_zero() || !seen_e.insert(e.key()).second) continue;
                for (const auto& f : flats_of(rs, e)) {
                    if (f.orthogonal.none() || !seen_f.insert(f.space.key()).second) continue;
                    // some w' with eigenvalue one has the whole flat in its zeta-eigenspace
                    bool found = false;
                    for (std::size_t j = 0; j < g.order() && !found; ++j) {
                        if (fixed[j].is_zero()) continue;
                        bool eigen = true;
                        for (std::size_t r = 0; r < f.space.dim() && eigen; ++r) {
                            Vector v = f.space.basis().row_vector(r);
                            Vector wv = g.act(j, lr, v);
                            for (auto& c : v) c *= z;
                            eigen = wv == v;
                        }
                        if (!eigen) continue;
                        // P is the stabilizer of a generic fixed vector of w'
                        RootSubset p = orthogonal_roots(rs, fixed[j]);
                        auto it = class_of.find(p.to_string());
                        REQUIRE(it != class_of.end());
                        REQUIRE(it->second->rank < static_cast<std::size_t>(rs.rank()));
                        const auto& deg = it->second->degrees;
                        REQUIRE(std::any_of(deg.begin(), deg.end(), [b](int d) { return d % b == 0; }));
                        // and the flat lies in the span of Phi_P
                        Matrix span_rows(*lr.field, 0, rs.rank());
                        for (std::size_t a = 0; a < rs.num_roots(); ++a)
                            if (p.test(a)) span_rows.append_row(lr.roots[a]);
                        REQUIRE(Subspace::span(span_rows).contains(f.space));
                        found = true;
                    }
                    REQUIRE(found);
                }
            }
        }
    }
}

TEST_CASE("parabolic classes") {
    // A3: classes 1, A1, A1xA1, A2, A3
    auto a3 = parabolic_classes(sys("A3"));
    CHECK(a3.size() == 5);
    std::size_t subsystems = 0;
    for (const auto& c : a3) subsystems += c.members.size();
    // one parabolic subsystem per flat of the A3 arrangement: 1 + 6 + 4 + 3 + 1
    CHECK(subsystems == 15);
    auto e6 = parabolic_classes(sys("E6"));
    std::size_t best = 0;
    std::string best_type;
    for (const auto& c : e6)
        if (c.rank < 6 && c.num_roots > best) {
            best = c.num_roots;
            best_type = c.type;
        }
    CHECK(best == 40);
    CHECK(best_type == "D5");
    for (const auto& c : e6) CHECK(c.members.size() >= 1);
}
