#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qwalk/entanglement.hpp"
#include "qwalk/hermitian_eigen.hpp"
#include "qwalk/walk_engine.hpp"
#include "qwalk/walk_state.hpp"

using namespace qwalk;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// (|x0,y0> + |x1,y1>)/sqrt2 in a single coin branch: rho_xy is the Bell
// projector on the 2x2 product support.
WalkState embedded_bell_state() {
  WalkState s(2, 1);
  s.set_amplitude(-1, -1, 0, {kInvSqrt2, 0.0});
  s.set_amplitude(1, 1, 0, {kInvSqrt2, 0.0});
  s.set_time(1);
  return s;
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("reduced coin density of a product state is a pure projector") {
  const WalkState a0 = new_state(2, 1, alternate_initial_coin());
  const HermitianMatrix rho = reduced_coin_density(a0);
  REQUIRE(rho.dim == 2);
  CHECK(std::abs(rho.at(0, 0) - Complex{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(rho.at(1, 1) - Complex{0.5, 0.0}) < 1e-15);
  CHECK(std::abs(rho.at(0, 1) - Complex{0.0, -0.5}) < 1e-15);
  CHECK(std::abs(rho.at(1, 0) - Complex{0.0, 0.5}) < 1e-15);
  CHECK(rho.hermiticity_violation() == 0.0);
  CHECK(std::abs(rho.trace_real() - 1.0) < 1e-12);
}

TEST_CASE("one alternate step leaves the coin maximally mixed") {
  const WalkState a1 =
      step(new_state(2, 1, alternate_initial_coin()), WalkKind::alternate);
  const HermitianMatrix rho = reduced_coin_density(a1);
  CHECK(std::abs(rho.at(0, 0) - Complex{0.5, 0.0}) < 1e-12);
  CHECK(std::abs(rho.at(1, 1) - Complex{0.5, 0.0}) < 1e-12);
  CHECK(std::abs(rho.at(0, 1)) < 1e-15);
  CHECK(std::abs(rho.trace_real() - 1.0) < 1e-12);
}

TEST_CASE("von Neumann entropy of reference spectra") {
  const WalkState a0 = new_state(2, 1, alternate_initial_coin());
  CHECK(von_neumann_entropy(reduced_coin_density(a0)) < 1e-12);

  HermitianMatrix half = HermitianMatrix::zero(2);
  half.at(0, 0) = half.at(1, 1) = {0.5, 0.0};
  CHECK(von_neumann_entropy(half) == doctest::Approx(1.0).epsilon(1e-12));

  HermitianMatrix quarter = HermitianMatrix::zero(4);
  for (int i = 0; i < 4; ++i) quarter.at(i, i) = {0.25, 0.0};
  CHECK(von_neumann_entropy(quarter) == doctest::Approx(2.0).epsilon(1e-12));

  HermitianMatrix skewed = HermitianMatrix::zero(2);
  skewed.at(0, 0) = {0.75, 0.0};
  skewed.at(1, 1) = {0.25, 0.0};
  CHECK(von_neumann_entropy(skewed) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("entropy rejects non-density inputs") {
  HermitianMatrix skew = HermitianMatrix::zero(2);
  skew.at(0, 1) = {1.0, 0.0};
  skew.at(1, 0) = {0.0, 1.0};
  skew.at(0, 0) = skew.at(1, 1) = {0.5, 0.0};
  CHECK_THROWS_AS(von_neumann_entropy(skew), std::invalid_argument);

  HermitianMatrix wrong_trace = HermitianMatrix::zero(2);
  wrong_trace.at(0, 0) = {0.9, 0.0};
  wrong_trace.at(1, 1) = {0.2, 0.0};
  CHECK_THROWS_AS(von_neumann_entropy(wrong_trace), std::invalid_argument);

  HermitianMatrix not_psd = HermitianMatrix::zero(2);
  not_psd.at(0, 0) = {1.5, 0.0};
  not_psd.at(1, 1) = {-0.5, 0.0};
  CHECK_THROWS_AS(von_neumann_entropy(not_psd), std::invalid_argument);
}

TEST_CASE("coin-position entanglement endpoints") {
  const WalkState g0 = new_state(4, 1, grover_initial_coin());
  const WalkState a0 = new_state(2, 1, alternate_initial_coin());
  CHECK(coin_position_entanglement(g0) < 1e-12);
  CHECK(coin_position_entanglement(a0) < 1e-12);
  CHECK(coin_position_entanglement(step(a0, WalkKind::alternate)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(coin_position_entanglement(step(g0, WalkKind::grover)) ==
        doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("position density compresses to the occupied support") {
  const WalkState a0 = new_state(2, 2, alternate_initial_coin());
  const auto [rho0, basis0] = position_density(a0);
  REQUIRE(rho0.dim == 1);
  CHECK(std::abs(rho0.at(0, 0) - Complex{1.0, 0.0}) < 1e-15);
  CHECK(basis0.x_sites == std::vector<int>{0});
  CHECK(basis0.y_sites == std::vector<int>{0});

  const auto [rho1, basis1] = position_density(step(a0, WalkKind::alternate));
  REQUIRE(rho1.dim == 4);
  CHECK(basis1.x_sites == std::vector<int>{-1, 1});
  CHECK(basis1.y_sites == std::vector<int>{-1, 1});
  CHECK(std::abs(rho1.trace_real() - 1.0) < 1e-12);
  // two coin branches: rank 2 with eigenvalues {0, 0, 1/2, 1/2}
  const EigenResult spectrum = hermitian_eigenvalues(rho1);
  CHECK(std::abs(spectrum.eigenvalues[0]) < 1e-12);
  CHECK(std::abs(spectrum.eigenvalues[1]) < 1e-12);
  CHECK(spectrum.eigenvalues[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(spectrum.eigenvalues[3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("support basis grows one site per axis per step") {
  WalkState g = new_state(4, 10, grover_initial_coin());
  WalkState a = new_state(2, 10, alternate_initial_coin());
  for (int t = 0; t <= 10; ++t) {
    for (const WalkState* s : {&g, &a}) {
      const auto [rho, basis] = position_density(*s);
      CHECK(static_cast<int>(basis.x_sites.size()) == t + 1);
      CHECK(static_cast<int>(basis.y_sites.size()) == t + 1);
    }
    if (t < 10) {
      g = step(g, WalkKind::grover);
      a = step(a, WalkKind::alternate);
    }
  }
}

TEST_CASE("partial transpose swaps x indices") {
  const WalkState a1 =
      step(new_state(2, 1, alternate_initial_coin()), WalkKind::alternate);
  const auto [rho, basis] = position_density(a1);

  // applying twice restores the matrix exactly
  const HermitianMatrix once = partial_transpose_x(rho, basis);
  const HermitianMatrix twice = partial_transpose_x(once, basis);
  CHECK(twice.entries == rho.entries);
  CHECK(once.hermiticity_violation() == 0.0);
  CHECK(std::abs(once.trace_real() - 1.0) < 1e-12);

  // a diagonal matrix is untouched
  HermitianMatrix diag = HermitianMatrix::zero(4);
  for (int i = 0; i < 4; ++i) diag.at(i, i) = {0.25, 0.0};
  SupportBasis square{{-1, 1}, {-1, 1}};
  CHECK(partial_transpose_x(diag, square).entries == diag.entries);

  SupportBasis mismatched{{-1, 0, 1}, {-1, 1}};
  CHECK_THROWS_AS(partial_transpose_x(diag, mismatched), std::invalid_argument);
}

TEST_CASE("partial transpose of an embedded Bell pair") {
  const auto [rho, basis] = position_density(embedded_bell_state());
  REQUIRE(rho.dim == 4);
  const EigenResult r = hermitian_eigenvalues(partial_transpose_x(rho, basis));
  CHECK(r.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(r.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.eigenvalues[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.eigenvalues[3] == doctest::Approx(0.5).epsilon(1e-12));
  // maximal entanglement on a 2x2 support saturates the normalization
  CHECK(xy_negativity(embedded_bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("both walks start with zero x-y negativity") {
  const WalkState g0 = new_state(4, 1, grover_initial_coin());
  const WalkState a0 = new_state(2, 1, alternate_initial_coin());
  CHECK(xy_negativity(g0) == 0.0);
  CHECK(xy_negativity(a0) == 0.0);

  // t=1: each coin branch factorizes, so the spatial state is separable
  const WalkState a1 = step(a0, WalkKind::alternate);
  CHECK(xy_negativity(a1) == doctest::Approx(0.0).epsilon(1e-10));
  const auto [rho, basis] = position_density(a1);
  CHECK(std::abs(trace_norm(partial_transpose_x(rho, basis)) - 1.0) < 1e-12);

  const WalkState g1 = step(g0, WalkKind::grover);
  CHECK(xy_negativity(g1) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("measure ranges along short trajectories") {
  WalkState g = new_state(4, 8, grover_initial_coin());
  WalkState a = new_state(2, 8, alternate_initial_coin());
  for (int t = 0; t <= 8; ++t) {
    for (const WalkState* s : {&g, &a}) {
      const double entropy = coin_position_entanglement(*s);
      CHECK(entropy >= 0.0);
      CHECK(entropy <= std::log2(s->coin_dim()) + 1e-10);
      const double negativity = xy_negativity(*s);
      CHECK(negativity >= 0.0);
      CHECK(negativity <= 1.0 + 1e-10);
    }
    if (t < 8) {
      g = step(g, WalkKind::grover);
      a = step(a, WalkKind::alternate);
    }
  }
}

TEST_CASE("normalized entropy fluctuates less for the alternate walk") {
  // interpretation of the qualitative fluctuation claim: sample variance of
  // S/log2(dim) over t in [5, 20]
  std::vector<double> grover_series;
  std::vector<double> alternate_series;
  WalkState g = new_state(4, 20, grover_initial_coin());
  WalkState a = new_state(2, 20, alternate_initial_coin());
  for (int t = 0; t <= 20; ++t) {
    if (t >= 5) {
      grover_series.push_back(coin_position_entanglement(g) / 2.0);
      alternate_series.push_back(coin_position_entanglement(a));
    }
    if (t < 20) {
      g = step(g, WalkKind::grover);
      a = step(a, WalkKind::alternate);
    }
  }
  auto variance = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= xs.size();
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return var / xs.size();
  };
  CHECK(variance(alternate_series) < variance(grover_series));
}

}  // TEST_SUITE
