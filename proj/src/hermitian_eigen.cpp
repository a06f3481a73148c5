#include "qwalk/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

double HermitianMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < dim; ++i) t += at(i, i).real();
  return t;
}

double HermitianMatrix::hermiticity_violation() const {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    }
  }
  return worst;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& e : entries) s += std::norm(e);
  return std::sqrt(s);
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  HermitianMatrix m;
  m.dim = dim;
  m.entries.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
  return m;
}

namespace {

constexpr double kConvergenceFactor = 1e-13;  // times the diagonal scale
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const std::vector<Complex>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
    }
  }
  return std::sqrt(s);
}

double diagonal_frobenius(const std::vector<Complex>& a, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::norm(a[static_cast<std::size_t>(i) * n + i]);
  return std::sqrt(s);
}

// Zero a[p][q] by conjugating with the unitary that is the identity except
//   J_pp = c, J_pq = s e, J_qp = -s conj(e), J_qq = c,
// where e = a_pq / |a_pq| and (c, s) solve the 2x2 real Jacobi problem for
// [[a_pp, r], [r, a_qq]]. Only rows p and q are transformed arithmetically;
// columns follow by Hermitian symmetry.
void rotate(std::vector<Complex>& a, int n, int p, int q) {
  const std::size_t np = static_cast<std::size_t>(n) * p;
  const std::size_t nq = static_cast<std::size_t>(n) * q;
  const Complex apq = a[np + q];
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex e = apq / r;
  const double app = a[np + p].real();
  const double aqq = a[nq + q].real();
  const double tau = (aqq - app) / (2.0 * r);
  const double tan_theta =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + tan_theta * tan_theta);
  const double s = tan_theta * c;
  const double se_r = s * e.real();
  const double se_i = s * e.imag();

  // rows p, q: A <- J^dag A, i.e.
  //   a_pk' = c a_pk - (s e) a_qk,  a_qk' = (s conj(e)) a_pk + c a_qk
  double* rp = reinterpret_cast<double*>(a.data() + np);
  double* rq = reinterpret_cast<double*>(a.data() + nq);
  for (int k = 0; k < n; ++k) {
    const double ar = rp[2 * k];
    const double ai = rp[2 * k + 1];
    const double br = rq[2 * k];
    const double bi = rq[2 * k + 1];
    rp[2 * k] = c * ar - (se_r * br - se_i * bi);
    rp[2 * k + 1] = c * ai - (se_r * bi + se_i * br);
    rq[2 * k] = se_r * ar + se_i * ai + c * br;
    rq[2 * k + 1] = se_r * ai - se_i * ar + c * bi;
  }
  // mirror into columns p, q
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    a[static_cast<std::size_t>(k) * n + p] = std::conj(a[np + k]);
    a[static_cast<std::size_t>(k) * n + q] = std::conj(a[nq + k]);
  }
  // the 2x2 block has a closed form; drop the rounding dust
  a[np + p] = {app - r * tan_theta, 0.0};
  a[nq + q] = {aqq + r * tan_theta, 0.0};
  a[np + q] = {0.0, 0.0};
  a[nq + p] = {0.0, 0.0};
}

}  // namespace

EigenResult hermitian_eigenvalues(const HermitianMatrix& m) {
  if (m.dim < 1 || m.entries.size() != static_cast<std::size_t>(m.dim) * m.dim) {
    throw std::invalid_argument("malformed matrix");
  }
  if (m.hermiticity_violation() > kHermiticityTol) {
    throw std::invalid_argument("matrix is not Hermitian within 1e-10");
  }

  const int n = m.dim;
  std::vector<Complex> a = m.entries;

  EigenResult result;
  double off = offdiag_frobenius(a, n);
  double threshold = kConvergenceFactor * diagonal_frobenius(a, n);
  while (off > threshold && result.iterations < kMaxSweeps) {
    // early sweeps chase only the dominant couplings (Rutishauser)
    const double sweep_floor =
        result.iterations < 3 ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;
    const bool zero_small = result.iterations >= 4;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::size_t pq = static_cast<std::size_t>(p) * n + q;
        const double magnitude = std::abs(a[pq]);
        if (magnitude == 0.0 || magnitude <= sweep_floor) continue;
        if (zero_small) {
          // once a coupling is beyond double resolution of the diagonal,
          // rotating cannot change anything; drop it instead
          const double g = 100.0 * magnitude;
          const double dp = std::abs(a[static_cast<std::size_t>(p) * n + p].real());
          const double dq = std::abs(a[static_cast<std::size_t>(q) * n + q].real());
          if (dp + g == dp && dq + g == dq) {
            a[pq] = {0.0, 0.0};
            a[static_cast<std::size_t>(q) * n + p] = {0.0, 0.0};
            continue;
          }
        }
        rotate(a, n, p, q);
      }
    }
    ++result.iterations;
    off = offdiag_frobenius(a, n);
    threshold = kConvergenceFactor * diagonal_frobenius(a, n);
  }
  result.offdiag_norm = off;
  if (off > threshold) {
    throw std::runtime_error(
        "Jacobi eigensolver did not converge after " +
        std::to_string(kMaxSweeps) +
        " sweeps (off-diagonal norm " + std::to_string(off) + ")");
  }

  result.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) {
    result.eigenvalues[i] = a[static_cast<std::size_t>(i) * n + i].real();
  }
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

double trace_norm(const HermitianMatrix& m) {
  double s = 0.0;
  for (double v : hermitian_eigenvalues(m).eigenvalues) s += std::abs(v);
  return s;
}

}  // namespace qwalk
