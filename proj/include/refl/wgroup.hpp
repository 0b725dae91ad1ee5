#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "refl/rootsys.hpp"

namespace refl {

/// Coefficients from degree 0 upwards.
using CycloPoly = std::vector<CycloNum>;

struct GroupElement {
    Matrix matrix;           ///< root-basis coordinates over the base field
    std::vector<int> word;   ///< simple-reflection indices, leftmost first; may be empty
};

inline constexpr std::uint64_t kDefaultGroupCap = 100000;

/// All elements of W, each stored as the images of the simple roots.
///
/// An element is determined by w(alpha_1), ..., w(alpha_n); its matrix has
/// those root vectors as columns. Element 0 is the identity.
class GroupEnumeration {
public:
    GroupEnumeration(const RootSystem& rs, std::vector<RootIndex> images, std::vector<std::uint32_t> parent,
                     std::vector<std::uint8_t> generator);

    [[nodiscard]] const RootSystem& root_system() const noexcept { return *rs_; }
    [[nodiscard]] std::size_t order() const noexcept { return parent_.size(); }
    [[nodiscard]] std::span<const RootIndex> images(std::size_t i) const {
        return {images_.data() + i * static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_)};
    }
    [[nodiscard]] Matrix matrix(std::size_t i) const;
    [[nodiscard]] std::vector<int> word(std::size_t i) const;
    [[nodiscard]] GroupElement element(std::size_t i) const { return {matrix(i), word(i)}; }
    [[nodiscard]] Permutation root_permutation(std::size_t i) const;
    [[nodiscard]] int element_order(std::size_t i) const;

    /// w . x for x over any field containing the base field; roots must be lifted to x's field.
    [[nodiscard]] Vector act(std::size_t i, const LiftedRoots& roots, std::span<const CycloNum> x) const;

private:
    const RootSystem* rs_;
    int rank_;
    std::vector<RootIndex> images_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> generator_;
};

/// Breadth-first closure from the identity under left multiplication by simple reflections.
/// Throws GroupTooLarge when the order from the degree table exceeds cap.
GroupEnumeration enumerate_group(const RootSystem& rs, std::uint64_t cap = kDefaultGroupCap);

/// det(xI - M), exact, via reduction to Hessenberg form.
CycloPoly characteristic_polynomial(const Matrix& m);

/// p(value) with p's coefficients lifted to value's field (or vice versa).
CycloNum evaluate(const CycloPoly& p, const CycloNum& value);

/// True iff zeta_b is a root of the characteristic polynomial, i.e. the
/// zeta_b-eigenspace is nonzero. Uses divisibility by Phi_b over Q when the
/// polynomial is rational and direct evaluation otherwise.
bool admits_primitive_eigenvalue(const CycloPoly& charpoly, int b);
bool admits_primitive_eigenvalue(const GroupElement& w, int b);

/// s_1 s_2 ... s_n.
GroupElement coxeter_element(const RootSystem& rs);

/// Smallest k >= 1 with M^k = I; throws if none up to limit.
int matrix_order(const Matrix& m, int limit = 1000);

/// Order of the subgroup generated by the reflections in the given root pairs.
std::uint64_t reflection_subgroup_order(const RootSystem& rs, const std::vector<std::size_t>& pairs,
                                        std::uint64_t cap = 100000000);

}  // namespace refl
