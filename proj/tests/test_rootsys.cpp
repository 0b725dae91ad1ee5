#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "refl/error.hpp"
#include "refl/rootsys.hpp"
#include "supported_types.hpp"

using namespace refl;

namespace {

Vector coords(const RootSystem& rs, std::initializer_list<int> c) {
    Vector v;
    for (int x : c) v.emplace_back(rs.base_field(), Rational(x));
    return v;
}

RootSubset pair_of(std::size_t r) {
    RootSubset s;
    s.set(r);
    s.set(r ^ 1);
    return s;
}

}  // namespace

TEST_CASE("type label parsing") {
    CHECK(TypeLabel::parse("A5") == TypeLabel::make('A', 5));
    CHECK(TypeLabel::parse("I2(7)").m == 7);
    CHECK(TypeLabel::parse("I2(7)").str() == "I2(7)");
    CHECK_THROWS_AS(TypeLabel::parse("E8"), UnsupportedType);
    CHECK_THROWS_AS(TypeLabel::parse("D3"), UnsupportedType);
    CHECK_THROWS_AS(TypeLabel::parse("B1"), UnsupportedType);
    CHECK_THROWS_AS(TypeLabel::parse("I2(2)"), UnsupportedType);
    CHECK_THROWS_AS(TypeLabel::parse("F5"), UnsupportedType);
    CHECK_THROWS_AS(TypeLabel::parse("X3"), UnsupportedType);
    CHECK_FALSE(TypeLabel::parse("H3").crystallographic());
}

TEST_CASE("build examples") {
    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    CHECK(a2.num_roots() == 6);
    CHECK(a2.coxeter_number() == 3);
    CHECK(a2.degrees() == std::vector<int>{2, 3});

    auto e6 = RootSystem::build(TypeLabel::parse("E6"));
    CHECK(e6.num_roots() == 72);
    CHECK(e6.degrees() == std::vector<int>{2, 5, 6, 8, 9, 12});
    CHECK(e6.coxeter_number() == 12);

    auto b2 = RootSystem::build(TypeLabel::parse("B2"));
    CHECK(b2.num_roots() == 8);
    CHECK(b2.coxeter_number() == 4);

    CHECK(RootSystem::build(TypeLabel::parse("H3")).base_conductor() == 5);
    CHECK(RootSystem::build(TypeLabel::parse("I2(5)")).base_conductor() == 5);
}

TEST_CASE("group facts examples") {
    auto a1 = group_facts(TypeLabel::parse("A1"));
    CHECK(a1.degrees == std::vector<int>{2});
    CHECK(a1.coxeter_number == 2);
    CHECK(a1.order == 2);
    CHECK(a1.num_roots == 2);
    auto f4 = group_facts(TypeLabel::parse("F4"));
    CHECK(f4.degrees == std::vector<int>{2, 6, 8, 12});
    CHECK(f4.order == 1152);
    CHECK(group_facts(TypeLabel::parse("E7")).order == 2903040);
    CHECK(group_facts(TypeLabel::parse("H4")).order == 14400);
}

TEST_CASE("root system invariants for every supported type") {
    for (const auto& name : testing::supported_types(true)) {
        CAPTURE(name);
        auto rs = RootSystem::build(TypeLabel::parse(name));
        const int n = rs.rank();
        REQUIRE(static_cast<int>(rs.num_roots()) == n * rs.coxeter_number());
        REQUIRE(rs.coxeter_number() == rs.degrees().back());
        int positive = 0;
        for (int d : rs.degrees()) positive += d - 1;
        REQUIRE(2 * positive == static_cast<int>(rs.num_roots()));
        for (int i = 0; i < n; ++i) {
            Vector e(n, CycloNum(rs.base_field()));
            e[i] = CycloNum(rs.base_field(), Rational(1));
            REQUIRE(rs.root(2 * i) == e);
        }
        for (std::size_t k = 0; k < rs.num_pairs(); ++k) {
            Vector neg;
            for (const auto& x : rs.root(2 * k)) neg.push_back(-x);
            REQUIRE(rs.root(2 * k + 1) == neg);
        }
        // every reflection permutes the roots
        for (std::size_t k = 0; k < rs.num_pairs(); ++k) {
            const auto& p = rs.reflection_permutation(k);
            std::vector<bool> hit(rs.num_roots(), false);
            for (auto r : p) hit[r] = true;
            for (bool h : hit) REQUIRE(h);
            REQUIRE(p[2 * k] == 2 * k + 1);
        }
    }
}

TEST_CASE("roots have the lengths of the simple roots") {
    for (const auto& name : testing::supported_types(true)) {
        CAPTURE(name);
        auto rs = RootSystem::build(TypeLabel::parse(name));
        for (std::size_t r = 0; r < rs.num_roots(); ++r) {
            CycloNum len = rs.form(rs.root(r), rs.root(r));
            bool matches = false;
            for (int i = 0; i < rs.rank(); ++i) matches = matches || len == rs.gram()(i, i);
            REQUIRE(matches);
        }
        if (!rs.label().crystallographic() || rs.label().family == 'A' || rs.label().family == 'D' ||
            rs.label().family == 'E')
            for (int i = 0; i < rs.rank(); ++i) REQUIRE(rs.gram()(i, i).is_one());
    }
}

TEST_CASE("reflection matrix examples and properties") {
    auto a2 = RootSystem::build(TypeLabel::parse("A2"));
    Matrix s1 = reflection_matrix(a2, 0);
    CHECK(mat_vec(s1, a2.root(0)) == a2.root(1));
    CHECK(mat_vec(s1, a2.root(2)) == coords(a2, {1, 1}));

    for (const auto& name : {"A3", "B3", "G2", "F4", "H3", "I2(7)", "D4"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(TypeLabel::parse(name));
        const Matrix& g = rs.gram();
        for (std::size_t k = 0; k < rs.num_pairs(); ++k) {
            Matrix s = reflection_matrix(rs, 2 * k);
            REQUIRE(s * s == Matrix::identity(rs.base_field(), rs.rank()));
            REQUIRE(s.transpose() * g * s == g);
            REQUIRE(mat_vec(s, rs.root(2 * k)) == rs.root(2 * k + 1));
            for (std::size_t r = 0; r < rs.num_roots(); ++r) {
                Vector img = mat_vec(s, rs.root(r));
                REQUIRE(rs.root_index(img) == rs.reflection_permutation(k)[r]);
                if (rs.form(rs.root(2 * k), rs.root(r)).is_zero()) REQUIRE(img == rs.root(r));
            }
        }
    }
}

TEST_CASE("subsystem closure examples") {
    auto a3 = RootSystem::build(TypeLabel::parse("A3"));
    CHECK(subsystem_closure(a3, pair_of(0)) == pair_of(0));
    CHECK(subsystem_closure(a3, RootSubset{}).none());
    RootSubset two;
    two.set(0);
    two.set(2);
    CHECK(subsystem_closure(a3, two).count() == 6);
    CHECK(standard_parabolic(a3, 0b111).count() == 12);
}

TEST_CASE("subsystem closure is a closure operator") {
    std::mt19937_64 rng(5);
    for (const auto& name : {"A4", "B3", "D4", "H3", "F4"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(TypeLabel::parse(name));
        for (int trial = 0; trial < 60; ++trial) {
            RootSubset s, t;
            for (std::size_t r = 0; r < rs.num_roots(); ++r) {
                if (rng() % 11 == 0) s.set(r);
                if (s.test(r) || rng() % 9 == 0) t.set(r);
            }
            RootSubset cs = subsystem_closure(rs, s), ct = subsystem_closure(rs, t);
            REQUIRE((cs & s) == s);
            REQUIRE(subsystem_closure(rs, cs) == cs);
            REQUIRE((cs & ct) == cs);
            REQUIRE(subset_rank(rs, cs) == subset_rank(rs, s));
        }
    }
}

TEST_CASE("parabolic components") {
    auto e6 = RootSystem::build(TypeLabel::parse("E6"));
    CHECK(components_str(parabolic_components(e6, 0b111111 & ~(1u << 5))) == "D5");
    CHECK(components_str(parabolic_components(e6, 0b111111 & ~(1u << 1))) == "A5");
    CHECK(components_str(parabolic_components(e6, 0b011110)) == "D4");
    CHECK(components_str(parabolic_components(e6, 0b001111)) == "A4");
    CHECK(components_str(parabolic_components(e6, 0)) == "1");
    CHECK(parabolic_degrees(e6, 0b111111 & ~(1u << 5)) == std::vector<int>{2, 4, 5, 6, 8});
    auto f4 = RootSystem::build(TypeLabel::parse("F4"));
    CHECK(components_str(parabolic_components(f4, 0b0111)) == "B3");
    CHECK(components_str(parabolic_components(f4, 0b1110)) == "B3");
    CHECK(components_str(parabolic_components(f4, 0b1011)) == "A1xA2");
    auto h4 = RootSystem::build(TypeLabel::parse("H4"));
    CHECK(components_str(parabolic_components(h4, 0b0111)) == "H3");
    CHECK(components_str(parabolic_components(h4, 0b0011)) == "I2(5)");
    auto b4 = RootSystem::build(TypeLabel::parse("B4"));
    CHECK(components_str(parabolic_components(b4, 0b1100)) == "B2");
    // sizes of every standard parabolic agree with the degree table of its components
    for (const auto& name : {"E6", "F4", "B4", "D5", "H4", "A5"}) {
        CAPTURE(name);
        auto rs = RootSystem::build(TypeLabel::parse(name));
        for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
            int expected = 0;
            for (const auto& t : parabolic_components(rs, mask)) expected += group_facts(t).num_roots;
            REQUIRE(static_cast<int>(standard_parabolic(rs, mask).count()) == expected);
        }
    }
}
