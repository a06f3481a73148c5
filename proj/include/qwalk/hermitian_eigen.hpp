#pragma once

#include <vector>

#include "qwalk/hermitian_matrix.hpp"

namespace qwalk {

// Inputs are accepted as Hermitian when max |a_ij - conj(a_ji)| <= 1e-10.
inline constexpr double kHermiticityTol = 1e-10;

struct EigenResult {
  std::vector<double> eigenvalues;  // sorted ascending
  int iterations = 0;               // Jacobi sweeps performed
  double offdiag_norm = 0.0;        // final off-diagonal Frobenius norm
};

/// Full spectrum of a dense complex Hermitian matrix via cyclic Jacobi
/// rotations (row-major upper-triangle sweep order, values only).
/// Converged when the off-diagonal Frobenius norm drops below 1e-13 times
/// the diagonal scale; throws after 100 sweeps without convergence.
EigenResult hermitian_eigenvalues(const HermitianMatrix& m);

/// Sum of |lambda_i| over the spectrum.
double trace_norm(const HermitianMatrix& m);

}  // namespace qwalk
