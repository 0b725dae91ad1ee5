#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "random_values.hpp"
#include "refl/eigenstab.hpp"
#include "refl/error.hpp"
#include "refl/laurent.hpp"
#include "refl/literal.hpp"
#include "refl/springer.hpp"

using namespace refl;

namespace {

struct Setup {
    RootSystem rs;
    GroupEnumeration g;
    explicit Setup(const std::string& type) : rs(RootSystem::build(TypeLabel::parse(type))), g(enumerate_group(rs)) {}
    RationalityVerdict check(const std::string& text) const {
        return check_rationality_necessary(rs, g, parse_leading_term(text));
    }
};

std::string leading_json(const std::string& type, long long a, int b, const Vector& x) {
    nlohmann::json doc{{"type", type}, {"a", a}, {"b", b}};
    for (const auto& c : x) doc["x"].push_back(format_scalar(c));
    return doc.dump();
}

}  // namespace

TEST_CASE("parse examples") {
    auto ll = parse_leading_term(R"({"type":"A1","a":1,"b":2,"x":["1"]})");
    CHECK(ll.label == TypeLabel::make('A', 1));
    CHECK(ll.b == 2);
    CHECK_FALSE(ll.model_coordinates);

    auto a3 = parse_leading_term(R"({"type":"A3","a":1,"b":4,"x":["1","z4","-1","-z4"]})");
    CHECK(a3.model_coordinates);
    CHECK(a3.x[1] == CycloNum::zeta(4));

    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A1","a":2,"b":4,"x":["1"]})"), NotCoprime);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A1","a":0,"b":3,"x":["1"]})"), NotCoprime);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"B2","a":1,"b":2,"x":["0","z3-z3"]})"), ZeroLeadingTerm);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A1","a":1,"b":0,"x":["1"]})"), ParseError);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A1","a":1,"x":["1"]})"), ParseError);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A1","a":1,"b":2,"x":["1+"]})"), ParseError);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A1","a":1,"b":2,"x":"1"})"), ParseError);
    CHECK_THROWS_AS(parse_leading_term("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_leading_term("{"), ParseError);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"A2","a":1,"b":2,"x":["1","2","3","4"]})"), DimensionMismatch);
    CHECK_THROWS_AS(parse_leading_term(R"({"type":"E8","a":1,"b":2,"x":["1"]})"), UnsupportedType);

    auto hi = parse_leading_term(R"({"type":"A1","a":1,"b":2,"x":["1"],"higher":[["5"]]})");
    CHECK(hi.warnings.size() == 1);
}

TEST_CASE("check examples") {
    Setup a1("A1");
    auto v2 = a1.check(R"({"type":"A1","a":1,"b":2,"x":["1"]})");
    CHECK(v2.in_Vb);
    CHECK(v2.N == 2);
    CHECK(v2.bound == 2);
    CHECK(v2.equality);
    CHECK(v2.witness_order == 2);
    CHECK(v2.conclusion == Conclusion::PassesNecessaryCondition);

    auto v1 = a1.check(R"({"type":"A1","a":3,"b":1,"x":["2/3"]})");
    CHECK(v1.in_Vb);
    CHECK(v1.N == 2);
    CHECK_FALSE(v1.equality);
    CHECK(v1.conclusion == Conclusion::PassesNecessaryCondition);

    for (const char* x : {"1", "z3", "-5/2"}) {
        auto v3 = a1.check(std::string(R"({"type":"A1","a":1,"b":3,"x":[")") + x + "\"]}");
        CHECK_FALSE(v3.in_Vb);
        CHECK_FALSE(v3.witness_order);
        CHECK(v3.conclusion == Conclusion::FailsNecessaryCondition);
    }

    Setup a3("A3");
    auto cox = a3.check(R"({"type":"A3","a":1,"b":4,"x":["1","z4","-1","-z4"]})");
    CHECK(cox.in_Vb);
    CHECK(cox.N == 12);
    CHECK(cox.bound == 12);
    CHECK(cox.equality);
    CHECK(cox.witness_order == 4);
    CHECK(cox.invariants_in_Vb == true);

    auto json = nlohmann::json::parse(verdict_json(cox));
    CHECK(json["in_Vb"] == true);
    CHECK(json["N"] == 12);
    CHECK(json["bound"] == 12);
    CHECK(json["equality"] == true);
    CHECK(json["conclusion"] == "PassesNecessaryCondition");
    CHECK(json["witness_order"] == 4);
    CHECK(nlohmann::json::parse(verdict_json(a1.check(R"({"type":"A1","a":1,"b":3,"x":["1"]})")))["witness_order"]
              .is_null());

    // sum of model coordinates must vanish
    CHECK_THROWS_AS(a3.check(R"({"type":"A3","a":1,"b":4,"x":["1","1","1","1"]})"), PreconditionFailed);
    // type mismatch between the root system and the input
    CHECK_THROWS_AS(check_rationality_necessary(a3.rs, a3.g, parse_leading_term(R"({"type":"A1","a":1,"b":2,"x":["1"]})")),
                    PreconditionFailed);
}

TEST_CASE("verdicts agree across invariants and search on the classical corpus") {
    std::mt19937_64 rng(17);
    std::size_t in_count = 0, out_count = 0;
    for (const char* type : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4"}) {
        Setup s(type);
        InvariantSet inv = invariant_polynomials(s.rs);
        const int h = s.rs.coxeter_number();
        for (int b = 1; b <= h + 1; ++b) {
            CAPTURE(type);
            CAPTURE(b);
            const int L = eigen_conductor(s.rs, b);
            const CycloField& f = CycloField::get(L);
            std::vector<Vector> corpus;
            // points of random eigenspaces, when V(b) is nonzero
            std::vector<std::size_t> admitting;
            for (std::size_t i = 0; i < s.g.order(); ++i)
                if (admits_primitive_eigenvalue(characteristic_polynomial(s.g.matrix(i)), b)) admitting.push_back(i);
            for (int t = 0; t < 12 && !admitting.empty(); ++t) {
                Subspace e = eigenspace(s.rs, s.g.element(admitting[rng() % admitting.size()]), b);
                Vector x(s.rs.rank(), CycloNum(f));
                for (std::size_t r = 0; r < e.dim(); ++r) {
                    CycloNum c = testing::random_small(rng, f);
                    for (int j = 0; j < s.rs.rank(); ++j) x[j] += c * lift(e.basis()(r, j), L);
                }
                if (!is_zero(x)) corpus.push_back(x);
            }
            // generic and low-support vectors
            for (int t = 0; t < 8; ++t) {
                Vector x(s.rs.rank(), CycloNum(f));
                for (auto& c : x)
                    if (t % 2 == 0 || rng() % 2) c = testing::random_small(rng, f);
                if (!is_zero(x)) corpus.push_back(x);
            }
            for (const auto& x : corpus) {
                const Vector model = inv.to_model(x);
                const std::string text = leading_json(type, 1, b, model);
                RationalityVerdict v = s.check(text);  // throws on disagreement
                REQUIRE(v.invariants_in_Vb.has_value());
                REQUIRE(*v.invariants_in_Vb == v.in_Vb);
                REQUIRE((!v.in_Vb || v.N >= v.bound));
                REQUIRE(v.equality == (v.in_Vb && v.N == v.bound));
                (v.in_Vb ? in_count : out_count)++;

                // a enters only through the coprimality check
                for (long long a : {-7LL, 5LL, 1LL + 6LL * b}) {
                    if (std::gcd(a, static_cast<long long>(b)) != 1) continue;
                    RationalityVerdict w = s.check(leading_json(type, a, b, model));
                    REQUIRE(verdict_json(w) == verdict_json(v));
                }
            }
        }
    }
    CHECK(in_count > 100);
    CHECK(out_count > 100);
}

TEST_CASE("non-classical types rely on search alone") {
    Setup g2("G2");
    Subspace e = eigenspace(g2.rs, coxeter_element(g2.rs), 6);
    auto v = g2.check(leading_json("G2", 5, 6, e.basis().row_vector(0)));
    CHECK(v.in_Vb);
    CHECK_FALSE(v.invariants_in_Vb);
    CHECK(v.N == 12);
    CHECK(v.equality);
    CHECK(v.witness_order == 6);

    auto off = g2.check(leading_json("G2", 1, 4, e.basis().row_vector(0)));
    CHECK_FALSE(off.in_Vb);
    CHECK(off.conclusion == Conclusion::FailsNecessaryCondition);
}
