#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refl/rootsys.hpp"
#include "refl/wgroup.hpp"

namespace refl {

/// Coordinates in which the invariants are written.
enum class Model {
    SumZero,    ///< type A_{n-1}: n coordinates summing to zero, alpha_i = e_i - e_{i+1}
    Signed,     ///< type B_n: alpha_i = e_i - e_{i+1}, alpha_n = e_n
    Even,       ///< type D_n: alpha_i = e_i - e_{i+1}, alpha_n = e_{n-1} + e_n
    RootBasis,  ///< every other type; only Q is available
};

/// Fundamental invariants of a type in its coordinate model.
///
/// For A, B and D the full generating set is available (power sums,
/// e_k(x^2), e_k(x^2) with the product x_1...x_n). Every other type exposes
/// only Q(x) = B(x, x) in root-basis coordinates.
class InvariantSet {
public:
    [[nodiscard]] const TypeLabel& label() const noexcept { return label_; }
    [[nodiscard]] Model model() const noexcept { return model_; }
    [[nodiscard]] bool full() const noexcept { return model_ != Model::RootBasis; }
    [[nodiscard]] std::size_t size() const noexcept { return degrees_.size(); }
    [[nodiscard]] int degree(std::size_t i) const { return degrees_[i]; }
    [[nodiscard]] const std::vector<int>& degrees() const noexcept { return degrees_; }
    [[nodiscard]] std::size_t model_dim() const noexcept { return embedding_.rows(); }
    /// Columns are the simple roots in model coordinates.
    [[nodiscard]] const Matrix& embedding() const noexcept { return embedding_; }

    /// i-th invariant at x (model coordinates). Throws DimensionMismatch.
    [[nodiscard]] CycloNum evaluate(std::size_t i, std::span<const CycloNum> x) const;

    [[nodiscard]] Vector to_model(std::span<const CycloNum> root_coords) const;
    /// Throws PreconditionFailed if x is outside the image (type A: coordinate sum nonzero).
    [[nodiscard]] Vector to_root(std::span<const CycloNum> model_coords) const;

private:
    friend InvariantSet invariant_polynomials(const RootSystem& rs);
    TypeLabel label_;
    Model model_ = Model::RootBasis;
    std::vector<int> degrees_;
    Matrix embedding_;
    Matrix gram_;  ///< root-basis form, for Q in the RootBasis model
};

InvariantSet invariant_polynomials(const RootSystem& rs);

/// Q(x) = B(x, x), x in root-basis coordinates of any conductor.
CycloNum quadratic_invariant(const RootSystem& rs, std::span<const CycloNum> x);

/// Q_i(x) = 0 for every i with b not dividing d_i (x in model coordinates).
/// Throws QuadraticOnly for types without a full invariant set.
bool in_Vb_by_invariants(const InvariantSet& inv, std::span<const CycloNum> x, int b);

/// Some w with w.x = zeta_b x (root-basis coordinates), or none.
std::optional<std::size_t> in_Vb_by_search(const RootSystem& rs, const GroupEnumeration& g,
                                           std::span<const CycloNum> x, int b);

/// rank(Phi_x) <= n - 2. Requires x != 0, Q(x) = 0 and n > 2.
bool quadratic_rank_check(const RootSystem& rs, std::span<const CycloNum> x);

}  // namespace refl
