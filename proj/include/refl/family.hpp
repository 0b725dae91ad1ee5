#pragma once

#include <optional>
#include <string>
#include <vector>

#include "refl/rootsys.hpp"
#include "refl/wgroup.hpp"

namespace refl {

/// An explicit zeta_b-eigenvector in a classical coordinate model, with the
/// signed permutation w that realizes w.x = zeta_b x.
struct ClassicalWitness {
    TypeLabel label;
    int b;
    int k;
    std::vector<CycloNum> alphas;
    Vector vector;                   ///< model coordinates (see springer Model)
    std::vector<std::size_t> source; ///< (w.x)_i = sign_i * x_{source_i}
    std::vector<int> sign;
};

/// Coordinates zeta^i alpha_j (0 <= i < b, 1 <= j <= k) followed by n - kb zeros,
/// as a point of the sum-zero model of A_{n-1}. Requires 1 < b, kb <= n, alphas nonzero.
ClassicalWitness construct_eigenvector_A(int n, int b, int k, const std::vector<CycloNum>& alphas);

/// B_n and D_n analogues: the 2n values +-x_i are the zeta-orbits of the alphas
/// together with zeros. A block uses b/2 coordinates for even b and b for odd b.
/// For D_n the number of sign changes of w must be even; throws PreconditionFailed
/// if no zero coordinate is left to absorb an odd count.
ClassicalWitness construct_eigenvector_B(int n, int b, int k, const std::vector<CycloNum>& alphas);
ClassicalWitness construct_eigenvector_D(int n, int b, int k, const std::vector<CycloNum>& alphas);

/// w.x for the witness's signed permutation.
Vector apply_witness(const ClassicalWitness& w);

/// Signed permutation of the witness as a group element in root-basis coordinates.
Matrix witness_matrix(const RootSystem& rs, const ClassicalWitness& w);

/// Largest stabilizer among the degenerate witnesses (all zeta^{i_j} alpha_j equal).
struct StabilizerShape {
    std::string shape;
    int root_count;
};

/// Type A: (S_k)^b x S_{n-bk}, root count b k(k-1) + (n-kb)(n-kb-1), n the number of
/// model coordinates. Types B and D: the root count of the degenerate signed witness,
/// counted directly in the model. Throws UnsupportedType for other families and
/// PreconditionFailed if (n, b, k) is inadmissible.
StabilizerShape predicted_max_stabilizer(char family, int n, int b, int k);

/// Number of model coordinates one alpha occupies.
int block_size(char family, int b);

/// prod (X - x_i) (type A) or prod (X^2 - x_i^2) (types B, D), constant term first.
CycloPoly witness_polynomial(const ClassicalWitness& w);

/// If p = X^m + a_1 X^{m-b} + ... + a_k X^{m-bk} with a_k != 0, returns a_1..a_k.
std::optional<std::vector<CycloNum>> sparse_coefficients(const CycloPoly& p, int b);

}  // namespace refl
