#pragma once

#include <functional>
#include <vector>

#include "qwalk/walk_state.hpp"

namespace qwalk {

enum class WalkKind { grover, alternate };
enum class Axis { x, y };

/// Coin dimension the walk kind requires: 4 for grover, 2 for alternate.
int coin_dim_for(WalkKind kind);
const char* walk_name(WalkKind kind);

/// d x d unitary acting on the coin space. Unitarity (U U^dag = I within
/// 1e-12 entrywise) is checked at construction.
class CoinOperator {
 public:
  CoinOperator(int dim, std::vector<Complex> entries);  // row-major
  static CoinOperator identity(int dim);

  int dim() const { return dim_; }
  Complex entry(int i, int j) const { return entries_[i * dim_ + j]; }

 private:
  int dim_;
  std::vector<Complex> entries_;
};

/// (1/sqrt2) [[1, 1], [1, -1]].
CoinOperator hadamard();

/// 4x4 Grover diffusion coin: -1/2 on the diagonal, +1/2 elsewhere.
CoinOperator grover4();

/// Replace the coin sub-vector at every site by op * sub-vector.
WalkState apply_coin(const WalkState& state, const CoinOperator& op);

/// One-site conditional move along one axis for a 2-coin state: coin 0
/// moves toward the negative axis direction, coin 1 toward the positive.
/// Time is not advanced. Throws if the shift would push support past the
/// storage radius.
WalkState shift_axis(const WalkState& state, Axis axis);

/// Diagonal conditional move for a 4-coin state:
/// c=0 -> (-1,-1), c=1 -> (-1,+1), c=2 -> (+1,-1), c=3 -> (+1,+1).
WalkState shift_2d(const WalkState& state);

/// One full time step. Grover: coin G then the diagonal shift. Alternate:
/// coin H, shift along x, coin H, shift along y. Increments time.
WalkState step(const WalkState& state, WalkKind kind);

/// Same step sequence with a caller-supplied coin operator (the default
/// coins are hadamard() and grover4()).
WalkState step(const WalkState& state, WalkKind kind, const CoinOperator& coin);

using StepObserver = std::function<void(const WalkState&)>;

/// Apply `steps` time steps. The observer, when given, sees every
/// intermediate state (times t0+1 .. t0+steps), enabling time-series
/// collection without storing all states. Radius overflow is detected
/// before any stepping happens.
WalkState evolve(const WalkState& state, WalkKind kind, int steps,
                 const StepObserver& observer = {});
WalkState evolve(const WalkState& state, WalkKind kind, int steps,
                 const StepObserver& observer, const CoinOperator& coin);

/// Independent evolution route: iterates the per-site scalar amplitude
/// recurrences of the two walks directly, with no operator composition.
/// Used as an oracle against step()/evolve().
WalkState scalar_recurrence_oracle(WalkKind kind, const WalkState& init,
                                   int steps);

/// max over (x, y, c) of |a.amplitude - b.amplitude| (grids may differ in
/// radius; out-of-grid amplitudes count as 0).
double max_amplitude_difference(const WalkState& a, const WalkState& b);

}  // namespace qwalk
