#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refl/rootsys.hpp"
#include "refl/wgroup.hpp"

namespace refl {

/// One bit per root pair; pair k holds roots 2k and 2k+1.
using PairSet = std::bitset<128>;

RootSubset roots_of(const PairSet& pairs);

struct EigenVectorPoint {
    Vector coords;                        ///< root-basis coordinates, nonzero
    std::optional<std::size_t> element;   ///< index into the enumeration with w.x = zeta_b x
    int b = 0;
};

/// Conductor of the eigenspace computations for b: normalized lcm(L0, b).
int eigen_conductor(const RootSystem& rs, int b);

/// ker(w - zeta_b I) over Q(zeta_L), L = eigen_conductor(rs, b).
Subspace eigenspace(const RootSystem& rs, const Matrix& w, int b);
inline Subspace eigenspace(const RootSystem& rs, const GroupElement& w, int b) { return eigenspace(rs, w.matrix, b); }

/// Roots vanishing on all of E (for E = span(x) this is Phi_x).
RootSubset orthogonal_roots(const RootSystem& rs, const Subspace& e);
/// Roots with B(alpha, x) = 0; x may live in any conductor.
RootSubset orthogonal_roots(const RootSystem& rs, std::span<const CycloNum> x);

struct ParabolicWitness {
    std::size_t element;   ///< w with w Phi_I = Phi_x
    unsigned simple_mask;  ///< I
    std::string type;      ///< component string of W_I
};

struct StabilizerReport {
    RootSubset phi_x;
    int N = 0;
    /// Filled by stabilizer() only.
    std::uint64_t group_order = 0;
    std::uint64_t reflection_subgroup_order = 0;
    std::optional<ParabolicWitness> parabolic_witness;

    /// W_x equals the group generated by its reflections.
    [[nodiscard]] bool generated_by_reflections() const { return group_order == reflection_subgroup_order; }
};

/// Phi_x and N(x) = |Phi| - |Phi_x|. Throws ZeroVector.
StabilizerReport N_of(const RootSystem& rs, std::span<const CycloNum> x);

/// N_of plus a full scan for W_x, the order of the reflection subgroup of
/// Phi_x, and a parabolic witness. Throws ZeroVector.
StabilizerReport stabilizer(const RootSystem& rs, const GroupEnumeration& g, std::span<const CycloNum> x);

struct Flat {
    Subspace space;
    RootSubset orthogonal;
};

/// Every flat E cap (intersection of root hyperplanes) that is nonzero, E included.
/// Throws EmptyEigenspace for E = 0.
std::vector<Flat> flats_of(const RootSystem& rs, const Subspace& e);

struct FlatMinimum {
    int min_N;
    Subspace witness_flat;
    RootSubset witness_phi;
    std::size_t flats_visited;
};

/// Exact minimum of N over E minus 0, by recursion over flats. Throws EmptyEigenspace.
FlatMinimum min_N_over_eigenspace(const RootSystem& rs, const Subspace& e);

struct VerificationRecord {
    TypeLabel label;
    int b = 0;
    int rank = 0;
    bool vb_nonempty = false;
    int min_N = 0;         ///< meaningful only when vb_nonempty
    int bound = 0;         ///< b n
    bool equality = false; ///< min_N == bound
    std::optional<Subspace> witness_flat;
    RootSubset witness_phi;
    std::uint64_t elements_scanned = 0;
    std::uint64_t elements_admitting = 0;
    std::size_t flats_visited = 0;
    std::vector<int> admitting_orders;  ///< distinct orders of the w with Omega(w, zeta_b) != 0
    double wall_time_ms = 0;

    /// min_N >= bn, with equality exactly when b = h; vacuous if V(b) is empty.
    [[nodiscard]] bool theorem_holds(int coxeter_number) const;
};

struct VerifyOptions {
    unsigned workers = 0;  ///< 0 selects default_workers()
};

/// REFL_WORKERS if set to a positive integer, else the hardware concurrency.
unsigned default_workers();

/// One record per b, sharing one pass of characteristic polynomials and a
/// flat memo per b. Results do not depend on the worker count.
std::vector<VerificationRecord> verify(const RootSystem& rs, const GroupEnumeration& g, const std::vector<int>& bs,
                                       VerifyOptions opts = {});
VerificationRecord min_N(const RootSystem& rs, const GroupEnumeration& g, int b, VerifyOptions opts = {});

/// Every divisor of every degree, ascending.
std::vector<int> degree_divisors(const RootSystem& rs);

/// For every w in W_I: Omega(w, zeta_b) lies in the span of the simple roots in I.
/// Requires b >= 2 and I proper.
bool check_parabolic_eigenspace_lemma(const RootSystem& rs, const GroupEnumeration& g, unsigned simple_mask, int b);

/// A conjugacy class of parabolic subsystems, represented by a standard W_I.
struct ParabolicClass {
    unsigned mask;                 ///< representative I (smallest mask in the class)
    std::string type;
    std::size_t num_roots;
    std::size_t rank;
    std::vector<int> degrees;
    std::vector<RootSubset> members;  ///< all conjugates of Phi_I, sorted
};

/// All parabolic subsystems (conjugates of standard Phi_I) grouped into classes,
/// found as orbits of root bitsets under the simple reflections.
std::vector<ParabolicClass> parabolic_classes(const RootSystem& rs);

}  // namespace refl
