#pragma once

#include <bitset>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "refl/matrix.hpp"

namespace refl {

/// Irreducible finite Coxeter type, e.g. A5, D4, E6, H3, I2(7).
struct TypeLabel {
    char family = 'A';
    int n = 1;  ///< rank
    int m = 0;  ///< dihedral parameter, only for I2(m)

    /// Throws UnsupportedType for inadmissible labels (including E8).
    static TypeLabel parse(const std::string& text);
    static TypeLabel make(char family, int n, int m = 0);
    [[nodiscard]] std::string str() const;
    [[nodiscard]] bool crystallographic() const;

    friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

struct GroupFacts {
    std::vector<int> degrees;  ///< ascending
    int coxeter_number;
    std::uint64_t order;
    int num_roots;
};

/// Static degree table; |W| and |Phi| derived from it.
GroupFacts group_facts(const TypeLabel& label);

/// Index set into RootSystem::roots. 256 bits covers every supported type.
using RootSubset = std::bitset<256>;

using RootIndex = std::uint16_t;
using Permutation = std::vector<RootIndex>;

/// Roots and functionals lifted into a larger field, for pairing with vectors there.
struct LiftedRoots {
    const CycloField* field;
    std::vector<Vector> roots;
    std::vector<Vector> functionals;  ///< row vector alpha^T G per root
};

/// Root system in root-basis coordinates with an explicit Gram matrix.
///
/// Roots come in pairs: index 2k is the representative and 2k+1 its negative;
/// indices 0, 2, ..., 2(n-1) are the simple roots.
class RootSystem {
public:
    static RootSystem build(const TypeLabel& label);

    [[nodiscard]] const TypeLabel& label() const noexcept { return label_; }
    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] const Matrix& gram() const noexcept { return gram_; }
    [[nodiscard]] const CycloField& base_field() const noexcept { return gram_.field(); }
    [[nodiscard]] int base_conductor() const noexcept { return gram_.conductor(); }
    [[nodiscard]] const std::vector<int>& degrees() const noexcept { return facts_.degrees; }
    [[nodiscard]] int coxeter_number() const noexcept { return facts_.coxeter_number; }
    [[nodiscard]] std::uint64_t group_order() const noexcept { return facts_.order; }
    [[nodiscard]] std::size_t num_roots() const noexcept { return roots_.size(); }
    [[nodiscard]] std::size_t num_pairs() const noexcept { return roots_.size() / 2; }
    [[nodiscard]] const Vector& root(std::size_t i) const { return roots_[i]; }
    [[nodiscard]] const std::vector<Vector>& roots() const noexcept { return roots_; }
    [[nodiscard]] const Vector& functional(std::size_t i) const { return functionals_[i]; }
    [[nodiscard]] int coxeter_entry(int i, int j) const { return coxeter_[i][j]; }

    /// B(u, v) = u^T G v for vectors in the base field.
    [[nodiscard]] CycloNum form(std::span<const CycloNum> u, std::span<const CycloNum> v) const;
    /// Index of v in the root list, or -1.
    [[nodiscard]] int root_index(std::span<const CycloNum> v) const;

    /// Root permutation induced by the i-th simple reflection.
    [[nodiscard]] const Permutation& simple_permutation(int i) const { return simple_perm_[i]; }
    /// Root permutation induced by the reflection in root pair k (roots 2k, 2k+1).
    [[nodiscard]] const Permutation& reflection_permutation(std::size_t pair) const { return reflection_perm_[pair]; }

    [[nodiscard]] LiftedRoots lifted(int L) const;

private:
    TypeLabel label_;
    int rank_ = 0;
    Matrix gram_;
    GroupFacts facts_;
    std::vector<std::vector<int>> coxeter_;
    std::vector<Vector> roots_;
    std::vector<Vector> functionals_;
    std::unordered_map<std::string, RootIndex> index_;
    std::vector<Permutation> simple_perm_;
    std::vector<Permutation> reflection_perm_;
};

/// s_alpha(v) = v - 2 B(alpha, v) / B(alpha, alpha) alpha, in root-basis coordinates.
Matrix reflection_matrix(const RootSystem& rs, std::size_t alpha);

/// Phi intersected with the span of S.
RootSubset subsystem_closure(const RootSystem& rs, const RootSubset& s);

/// Dimension of the span of S.
std::size_t subset_rank(const RootSystem& rs, const RootSubset& s);

/// Root subsystem of the standard parabolic W_I, I a bitmask of simple roots.
RootSubset standard_parabolic(const RootSystem& rs, unsigned mask);

/// Irreducible components of the Coxeter subdiagram on the simple roots in mask.
std::vector<TypeLabel> parabolic_components(const RootSystem& rs, unsigned mask);

/// Degrees of W_I, the union of the component degree lists (sorted).
std::vector<int> parabolic_degrees(const RootSystem& rs, unsigned mask);

/// Short textual form of a component list, e.g. "A1xA2" or "1" for the trivial group.
std::string components_str(const std::vector<TypeLabel>& parts);

}  // namespace refl
