#pragma once

#include <utility>
#include <vector>

#include "qwalk/hermitian_matrix.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

// Axis sites with marginal probability at or below this are treated as
// unoccupied when compressing the (x, y) density matrix basis.
inline constexpr double kSupportThreshold = 1e-14;

/// Sorted axis sites carrying nonzero marginal probability; the product
/// basis for the spatial density matrix (row = x-index * |y| + y-index).
struct SupportBasis {
  std::vector<int> x_sites;
  std::vector<int> y_sites;
};

/// rho_C[c, c'] = sum_{x,y} psi_{x,y,c} conj(psi_{x,y,c'}).
HermitianMatrix reduced_coin_density(const WalkState& state);

/// S = -sum lambda_i log2 lambda_i, in bits, with 0 log 0 := 0
/// (eigenvalues below 1e-14 are skipped). Expects a density matrix:
/// Hermitian, trace 1 within 1e-8, eigenvalues >= -1e-10.
double von_neumann_entropy(const HermitianMatrix& rho);

/// von Neumann entropy of the reduced coin state.
double coin_position_entanglement(const WalkState& state);

/// rho_xy[(x,y),(x',y')] = sum_c psi_{x,y,c} conj(psi_{x',y',c}),
/// materialized over the compressed support basis.
std::pair<HermitianMatrix, SupportBasis> position_density(
    const WalkState& state);

/// Transposition of the x indices only:
/// out[(x,y),(x',y')] = rho[(x',y),(x,y')]. Hermiticity is preserved.
HermitianMatrix partial_transpose_x(const HermitianMatrix& rho,
                                    const SupportBasis& basis);

/// Negativity of the partially transposed spatial density matrix,
/// N = (sum |lambda_i| - 1) / (d - 1) with d = min(|x-support|, |y-support|),
/// normalized to [0, 1]; 0 when d = 1.
double xy_negativity(const WalkState& state);

}  // namespace qwalk
