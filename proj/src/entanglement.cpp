#include "qwalk/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qwalk/hermitian_eigen.hpp"

namespace qwalk {

namespace {

constexpr double kEigenvalueFloor = 1e-14;  // 0 log 0 := 0 below this
constexpr double kPsdTolerance = -1e-10;
constexpr double kTraceTolerance = 1e-8;

}  // namespace

HermitianMatrix reduced_coin_density(const WalkState& state) {
  const int d = state.coin_dim();
  HermitianMatrix rho = HermitianMatrix::zero(d);
  const int bound = std::min(state.time(), state.radius());
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      const std::size_t base = state.index(x, y, 0);
      for (int c = 0; c < d; ++c) {
        const Complex ac = state.data()[base + c];
        for (int cp = c; cp < d; ++cp) {
          rho.at(c, cp) += ac * std::conj(state.data()[base + cp]);
        }
      }
    }
  }
  for (int c = 0; c < d; ++c) {
    for (int cp = c + 1; cp < d; ++cp) {
      rho.at(cp, c) = std::conj(rho.at(c, cp));
    }
  }
  rho.basis_labels.reserve(d);
  for (int c = 0; c < d; ++c) rho.basis_labels.push_back("c" + std::to_string(c));
  return rho;
}

double von_neumann_entropy(const HermitianMatrix& rho) {
  if (rho.hermiticity_violation() > kHermiticityTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace_real() - 1.0) > kTraceTolerance) {
    throw std::invalid_argument("density matrix trace deviates from 1");
  }
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho).eigenvalues) {
    if (lambda < kPsdTolerance) {
      throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
    if (lambda < kEigenvalueFloor) continue;
    s -= lambda * std::log2(lambda);
  }
  // an eigenvalue one ulp above 1 would otherwise leave S at -1e-16
  return std::max(0.0, s);
}

double coin_position_entanglement(const WalkState& state) {
  return von_neumann_entropy(reduced_coin_density(state));
}

std::pair<HermitianMatrix, SupportBasis> position_density(
    const WalkState& state) {
  const int bound = std::min(state.time(), state.radius());
  const int d = state.coin_dim();

  SupportBasis basis;
  for (int x = -bound; x <= bound; ++x) {
    double marginal = 0.0;
    for (int y = -bound; y <= bound; ++y) {
      for (int c = 0; c < d; ++c) {
        marginal += std::norm(state.data()[state.index(x, y, c)]);
      }
    }
    if (marginal > kSupportThreshold) basis.x_sites.push_back(x);
  }
  for (int y = -bound; y <= bound; ++y) {
    double marginal = 0.0;
    for (int x = -bound; x <= bound; ++x) {
      for (int c = 0; c < d; ++c) {
        marginal += std::norm(state.data()[state.index(x, y, c)]);
      }
    }
    if (marginal > kSupportThreshold) basis.y_sites.push_back(y);
  }

  const int nx = static_cast<int>(basis.x_sites.size());
  const int ny = static_cast<int>(basis.y_sites.size());
  const int n = nx * ny;
  HermitianMatrix rho = HermitianMatrix::zero(n);
  for (int row = 0; row < n; ++row) {
    const int xr = basis.x_sites[row / ny];
    const int yr = basis.y_sites[row % ny];
    for (int col = row; col < n; ++col) {
      const int xc = basis.x_sites[col / ny];
      const int yc = basis.y_sites[col % ny];
      Complex acc{0.0, 0.0};
      for (int c = 0; c < d; ++c) {
        acc += state.data()[state.index(xr, yr, c)] *
               std::conj(state.data()[state.index(xc, yc, c)]);
      }
      rho.at(row, col) = acc;
      if (col != row) rho.at(col, row) = std::conj(acc);
    }
  }
  rho.basis_labels.reserve(n);
  for (int row = 0; row < n; ++row) {
    rho.basis_labels.push_back("(" + std::to_string(basis.x_sites[row / ny]) +
                               "," + std::to_string(basis.y_sites[row % ny]) +
                               ")");
  }
  return {std::move(rho), std::move(basis)};
}

HermitianMatrix partial_transpose_x(const HermitianMatrix& rho,
                                    const SupportBasis& basis) {
  const int nx = static_cast<int>(basis.x_sites.size());
  const int ny = static_cast<int>(basis.y_sites.size());
  if (rho.dim != nx * ny) {
    throw std::invalid_argument(
        "density matrix dimension does not match the support basis");
  }
  HermitianMatrix out = HermitianMatrix::zero(rho.dim);
  out.basis_labels = rho.basis_labels;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      for (int k = 0; k < nx; ++k) {
        for (int l = 0; l < ny; ++l) {
          out.at(i * ny + j, k * ny + l) = rho.at(k * ny + j, i * ny + l);
        }
      }
    }
  }
  return out;
}

double xy_negativity(const WalkState& state) {
  auto [rho, basis] = position_density(state);
  const int d = static_cast<int>(
      std::min(basis.x_sites.size(), basis.y_sites.size()));
  if (d <= 1) return 0.0;
  const double tn = trace_norm(partial_transpose_x(rho, basis));
  return std::max(0.0, (tn - 1.0) / (d - 1));
}

}  // namespace qwalk
