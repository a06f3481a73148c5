#pragma once

#include <string>
#include <vector>

#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Dense complex Hermitian matrix with optional basis labels (coin indices
/// or (x, y) sites for reduced density matrices).
struct HermitianMatrix {
  int dim = 0;
  std::vector<Complex> entries;           // row-major, dim x dim
  std::vector<std::string> basis_labels;  // empty or one label per row

  Complex at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
  Complex& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }

  double trace_real() const;
  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_violation() const;
  double frobenius_norm() const;

  static HermitianMatrix zero(int dim);
};

}  // namespace qwalk
