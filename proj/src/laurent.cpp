#include "refl/laurent.hpp"

#include <numeric>

#include <json.hpp>

#include "refl/eigenstab.hpp"
#include "refl/error.hpp"
#include "refl/literal.hpp"
#include "refl/springer.hpp"

namespace refl {
namespace {

using nlohmann::json;

template <class T>
T field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(std::string("field \"") + key + "\" has the wrong type");
    }
}

bool has_model(const TypeLabel& l) { return l.family == 'A' || l.family == 'B' || l.family == 'D'; }

}  // namespace

LaurentLeading parse_leading_term(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("leading term: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("leading term must be a JSON object");
    LaurentLeading ll;
    ll.label = TypeLabel::parse(field<std::string>(doc, "type"));
    ll.a = field<long long>(doc, "a");
    const long long b = field<long long>(doc, "b");
    if (b <= 0 || b > 1000000) throw ParseError("b must be a positive integer");
    ll.b = static_cast<int>(b);
    if (std::gcd(ll.a, b) != 1)
        throw NotCoprime("gcd(" + std::to_string(ll.a) + ", " + std::to_string(b) + ") != 1");

    for (const auto& s : field<std::vector<std::string>>(doc, "x")) ll.x.push_back(parse_scalar(s));
    const auto n = static_cast<std::size_t>(ll.label.n);
    if (ll.label.family == 'A' && ll.x.size() == n + 1) {
        ll.model_coordinates = true;
    } else if (ll.x.size() == n) {
        ll.model_coordinates = has_model(ll.label) && ll.label.family != 'A';
    } else {
        throw DimensionMismatch("x has " + std::to_string(ll.x.size()) + " coordinates for " + ll.label.str());
    }
    bool zero = true;
    for (const auto& c : ll.x) zero = zero && c.is_zero();
    if (zero) throw ZeroLeadingTerm();

    if (doc.contains("higher")) ll.warnings.emplace_back("higher-order terms ignored; only the leading term matters");
    return ll;
}

Vector leading_root_coordinates(const RootSystem& rs, const LaurentLeading& ll) {
    if (!(rs.label() == ll.label)) throw PreconditionFailed("root system does not match the leading term's type");
    if (!ll.model_coordinates) return ll.x;
    return invariant_polynomials(rs).to_root(ll.x);
}

std::string to_string(Conclusion c) {
    return c == Conclusion::PassesNecessaryCondition ? "PassesNecessaryCondition" : "FailsNecessaryCondition";
}

RationalityVerdict check_rationality_necessary(const RootSystem& rs, const GroupEnumeration& g,
                                               const LaurentLeading& ll) {
    const Vector x = leading_root_coordinates(rs, ll);
    RationalityVerdict v;
    v.bound = ll.b * rs.rank();
    v.witness = in_Vb_by_search(rs, g, x, ll.b);
    v.in_Vb = v.witness.has_value();
    if (v.witness) v.witness_order = g.element_order(*v.witness);

    if (has_model(ll.label)) {
        InvariantSet inv = invariant_polynomials(rs);
        v.invariants_in_Vb = in_Vb_by_invariants(inv, inv.to_model(x), ll.b);
        if (*v.invariants_in_Vb != v.in_Vb)
            throw TheoremViolation(ll.label.str() + ", b=" + std::to_string(ll.b) +
                                   ": invariant vanishing and eigen-search disagree on membership in V(b)");
    }

    v.N = N_of(rs, x).N;
    if (v.in_Vb && v.N < v.bound)
        throw TheoremViolation(ll.label.str() + ", b=" + std::to_string(ll.b) + ": N(x) = " + std::to_string(v.N) +
                               " < bn = " + std::to_string(v.bound));
    v.equality = v.in_Vb && v.N == v.bound;
    if (v.in_Vb && v.equality != (ll.b == rs.coxeter_number()))
        throw TheoremViolation(ll.label.str() + ", b=" + std::to_string(ll.b) +
                               ": equality N(x) = bn does not match b = h");
    v.conclusion = v.in_Vb ? Conclusion::PassesNecessaryCondition : Conclusion::FailsNecessaryCondition;
    return v;
}

std::string verdict_json(const RationalityVerdict& v) {
    using nlohmann::ordered_json;
    ordered_json order = v.witness_order ? ordered_json(*v.witness_order) : ordered_json(nullptr);
    ordered_json out{{"in_Vb", v.in_Vb},       {"N", v.N},
                     {"bound", v.bound},       {"equality", v.equality},
                     {"conclusion", to_string(v.conclusion)}, {"witness_order", order}};
    return out.dump();
}

}  // namespace refl
