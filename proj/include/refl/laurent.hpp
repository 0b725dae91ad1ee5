#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refl/rootsys.hpp"
#include "refl/wgroup.hpp"

namespace refl {

/// Leading term x t^{a/b} of a Cartan-valued Laurent element, x in V.
///
/// x is given in model coordinates where a model exists: n+1 coordinates for
/// A_n (a length-n vector is read as root-basis coordinates), n for B_n and
/// D_n. Every other type uses root-basis coordinates.
struct LaurentLeading {
    TypeLabel label;
    long long a = 0;
    int b = 1;       ///< gcd(a, b) = 1, b > 0
    Vector x;        ///< as supplied, nonzero
    bool model_coordinates = false;
    std::vector<std::string> warnings;
};

/// Parses {"type", "a", "b", "x": [scalar literals], "higher": ignored}.
/// Throws ParseError, NotCoprime, ZeroLeadingTerm, DimensionMismatch, UnsupportedType.
LaurentLeading parse_leading_term(std::string_view text);

/// x in root-basis coordinates.
Vector leading_root_coordinates(const RootSystem& rs, const LaurentLeading& ll);

enum class Conclusion { FailsNecessaryCondition, PassesNecessaryCondition };

std::string to_string(Conclusion c);

struct RationalityVerdict {
    bool in_Vb = false;
    std::optional<std::size_t> witness;  ///< index into the enumeration
    std::optional<int> witness_order;
    int N = 0;
    int bound = 0;          ///< b n
    bool equality = false;  ///< in_Vb and N == bound; happens exactly when b = h
    Conclusion conclusion = Conclusion::FailsNecessaryCondition;
    /// Vanishing of every invariant of degree not divisible by b; classical types only.
    std::optional<bool> invariants_in_Vb;
};

/// Necessary condition for rational conjugacy: x lies in V(b), and then N(x) >= bn.
/// a never enters; only gcd(a, b) = 1 was checked on input. Throws TheoremViolation
/// if N < bn for some x in V(b) or if the invariant and search verdicts disagree.
RationalityVerdict check_rationality_necessary(const RootSystem& rs, const GroupEnumeration& g,
                                               const LaurentLeading& ll);

/// {"in_Vb", "N", "bound", "equality", "conclusion", "witness_order"}.
std::string verdict_json(const RationalityVerdict& v);

}  // namespace refl
