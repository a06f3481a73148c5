#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

// Norm tolerances: states produced by evolution hold norm to 1e-12;
// user-supplied coin amplitudes get a looser gate (truncated decimals).
inline constexpr double kStateNormTol = 1e-12;
inline constexpr double kCoinInputNormTol = 1e-9;

/// Internal (coin) state of the walker: 2 or 4 complex amplitudes.
struct CoinState {
  std::vector<Complex> amplitudes;

  int dim() const { return static_cast<int>(amplitudes.size()); }
  double norm_squared() const;
};

/// (1/2)(1, -1, -1, 1): the 4-coin initial state for which the Grover
/// walk does not localize at the origin.
CoinState grover_initial_coin();

/// (1/sqrt2)(1, i): the symmetric single-qubit coin that starts the
/// alternate walk.
CoinState alternate_initial_coin();

/// Walker+coin amplitudes on the square lattice [-R, R]^2, stored densely
/// and origin-centred. A state evolved to time t has support only on
/// |x| <= t, |y| <= t with x+t and y+t even; odd-parity sites stay at
/// exactly 0. Value type: cheap to copy, safe to share read-only.
class WalkState {
 public:
  /// All-zero amplitude grid at time 0. Not normalized; see new_state()
  /// for the usual delta-at-origin construction.
  WalkState(int coin_dim, int radius);

  int coin_dim() const { return coin_dim_; }
  int radius() const { return radius_; }
  int time() const { return time_; }
  int side() const { return 2 * radius_ + 1; }

  bool in_grid(int x, int y) const {
    return x >= -radius_ && x <= radius_ && y >= -radius_ && y <= radius_;
  }

  Complex amplitude(int x, int y, int c) const;
  Complex amplitude_or_zero(int x, int y, int c) const;
  void set_amplitude(int x, int y, int c, Complex value);
  void set_time(int t);

  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(x + radius_) * side() + (y + radius_)) *
               coin_dim_ +
           c;
  }

  std::vector<Complex>& data() { return amps_; }
  const std::vector<Complex>& data() const { return amps_; }

 private:
  int coin_dim_;
  int radius_;
  int time_;
  std::vector<Complex> amps_;
};

/// Spatial distribution p(x, y) = sum_c |amplitude(x, y, c)|^2.
/// Only sites with nonzero probability are stored; map order is
/// lexicographic in (x, y).
struct ProbabilityDistribution {
  int radius = 0;
  std::map<std::pair<int, int>, double> values;

  double sum() const;
  double at_or_zero(int x, int y) const;
};

/// Delta function at the origin tensored with `coin`; time 0.
/// Throws std::invalid_argument on dimension mismatch or when the coin's
/// squared norm deviates from 1 by more than 1e-9.
WalkState new_state(int coin_dim, int radius, const CoinState& coin);

double norm_squared(const WalkState& state);
ProbabilityDistribution probability_distribution(const WalkState& state);
double origin_probability(const WalkState& state);

}  // namespace qwalk
