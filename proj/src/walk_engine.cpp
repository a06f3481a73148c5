#include "qwalk/walk_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double kUnitarityTol = 1e-12;
constexpr Complex kZero{0.0, 0.0};

[[noreturn]] void throw_radius_overflow(int time, int radius) {
  throw std::runtime_error("radius overflow: stepping past t=" +
                           std::to_string(time) + " would move support past "
                           "the storage radius " + std::to_string(radius));
}

[[noreturn]] void throw_boundary_loss() {
  // The walk lives on an infinite lattice; dropping amplitude at the grid
  // edge (or wrapping it around) would silently corrupt results.
  throw std::runtime_error(
      "shift would move nonzero amplitude outside the stored grid");
}

// Move coin component c of the flat grid one site along x (dir = +/-1).
// The row that would leave the grid must hold exact zeros.
void move_component_x(std::vector<Complex>& a, int side, int coin_dim, int c,
                      int dir) {
  const std::size_t row = static_cast<std::size_t>(side) * coin_dim;
  if (dir < 0) {
    for (int yi = 0; yi < side; ++yi) {
      if (a[static_cast<std::size_t>(yi) * coin_dim + c] != kZero) {
        throw_boundary_loss();
      }
    }
    for (int xi = 0; xi + 1 < side; ++xi) {
      for (int yi = 0; yi < side; ++yi) {
        const std::size_t dst = xi * row + static_cast<std::size_t>(yi) * coin_dim + c;
        a[dst] = a[dst + row];
      }
    }
    for (int yi = 0; yi < side; ++yi) {
      a[static_cast<std::size_t>(side - 1) * row + static_cast<std::size_t>(yi) * coin_dim + c] = kZero;
    }
  } else {
    for (int yi = 0; yi < side; ++yi) {
      if (a[static_cast<std::size_t>(side - 1) * row +
            static_cast<std::size_t>(yi) * coin_dim + c] != kZero) {
        throw_boundary_loss();
      }
    }
    for (int xi = side - 1; xi >= 1; --xi) {
      for (int yi = 0; yi < side; ++yi) {
        const std::size_t dst = xi * row + static_cast<std::size_t>(yi) * coin_dim + c;
        a[dst] = a[dst - row];
      }
    }
    for (int yi = 0; yi < side; ++yi) {
      a[static_cast<std::size_t>(yi) * coin_dim + c] = kZero;
    }
  }
}

void move_component_y(std::vector<Complex>& a, int side, int coin_dim, int c,
                      int dir) {
  const std::size_t row = static_cast<std::size_t>(side) * coin_dim;
  for (int xi = 0; xi < side; ++xi) {
    Complex* base = a.data() + xi * row;
    if (dir < 0) {
      if (base[c] != kZero) throw_boundary_loss();
      for (int yi = 0; yi + 1 < side; ++yi) {
        base[static_cast<std::size_t>(yi) * coin_dim + c] =
            base[static_cast<std::size_t>(yi + 1) * coin_dim + c];
      }
      base[static_cast<std::size_t>(side - 1) * coin_dim + c] = kZero;
    } else {
      if (base[static_cast<std::size_t>(side - 1) * coin_dim + c] != kZero) {
        throw_boundary_loss();
      }
      for (int yi = side - 1; yi >= 1; --yi) {
        base[static_cast<std::size_t>(yi) * coin_dim + c] =
            base[static_cast<std::size_t>(yi - 1) * coin_dim + c];
      }
      base[c] = kZero;
    }
  }
}

// op * coin sub-vector at every site with |x| <= bound_x, |y| <= bound_y.
void apply_coin_in_place(WalkState& state, const CoinOperator& op, int bound_x,
                         int bound_y) {
  const int d = state.coin_dim();
  const int bx = std::min(bound_x, state.radius());
  const int by = std::min(bound_y, state.radius());
  std::array<Complex, 4> mixed;
  std::vector<Complex>& a = state.data();
  for (int x = -bx; x <= bx; ++x) {
    for (int y = -by; y <= by; ++y) {
      const std::size_t base = state.index(x, y, 0);
      for (int i = 0; i < d; ++i) {
        Complex acc = kZero;
        for (int j = 0; j < d; ++j) acc += op.entry(i, j) * a[base + j];
        mixed[i] = acc;
      }
      for (int i = 0; i < d; ++i) a[base + i] = mixed[i];
    }
  }
}

void require_kind_dims(const WalkState& state, WalkKind kind,
                       const CoinOperator& coin) {
  const int want = coin_dim_for(kind);
  if (state.coin_dim() != want) {
    throw std::invalid_argument(std::string(walk_name(kind)) +
                                " walk needs coin dimension " +
                                std::to_string(want) + ", state has " +
                                std::to_string(state.coin_dim()));
  }
  if (coin.dim() != want) {
    throw std::invalid_argument("coin operator dimension " +
                                std::to_string(coin.dim()) +
                                " does not match walk coin dimension " +
                                std::to_string(want));
  }
}

void step_in_place(WalkState& state, WalkKind kind, const CoinOperator& coin) {
  const int t = state.time();
  if (t + 1 > state.radius()) throw_radius_overflow(t, state.radius());
  std::vector<Complex>& a = state.data();
  const int side = state.side();
  const int d = state.coin_dim();
  if (kind == WalkKind::grover) {
    apply_coin_in_place(state, coin, t, t);
    move_component_x(a, side, d, 0, -1);
    move_component_y(a, side, d, 0, -1);
    move_component_x(a, side, d, 1, -1);
    move_component_y(a, side, d, 1, +1);
    move_component_x(a, side, d, 2, +1);
    move_component_y(a, side, d, 2, -1);
    move_component_x(a, side, d, 3, +1);
    move_component_y(a, side, d, 3, +1);
  } else {
    apply_coin_in_place(state, coin, t, t);
    move_component_x(a, side, d, 0, -1);
    move_component_x(a, side, d, 1, +1);
    apply_coin_in_place(state, coin, t + 1, t);
    move_component_y(a, side, d, 0, -1);
    move_component_y(a, side, d, 1, +1);
  }
  state.set_time(t + 1);
}

CoinOperator default_coin(WalkKind kind) {
  return kind == WalkKind::grover ? grover4() : hadamard();
}

}  // namespace

int coin_dim_for(WalkKind kind) {
  return kind == WalkKind::grover ? 4 : 2;
}

const char* walk_name(WalkKind kind) {
  return kind == WalkKind::grover ? "grover" : "alternate";
}

CoinOperator::CoinOperator(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("coin operator dimension must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::invalid_argument("coin operator needs dim*dim entries");
  }
  // U U^dag = I, entrywise
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Complex acc = kZero;
      for (int k = 0; k < dim; ++k) {
        acc += entry(i, k) * std::conj(entry(j, k));
      }
      const Complex want = (i == j) ? Complex{1.0, 0.0} : kZero;
      if (std::abs(acc - want) > kUnitarityTol) {
        throw std::invalid_argument("coin operator is not unitary");
      }
    }
  }
}

CoinOperator CoinOperator::identity(int dim) {
  std::vector<Complex> e(static_cast<std::size_t>(dim) * dim, kZero);
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = {1.0, 0.0};
  return {dim, std::move(e)};
}

CoinOperator hadamard() {
  const double h = kInvSqrt2;
  return {2, {{h, 0.0}, {h, 0.0}, {h, 0.0}, {-h, 0.0}}};
}

CoinOperator grover4() {
  std::vector<Complex> e(16, Complex{0.5, 0.0});
  for (int i = 0; i < 4; ++i) e[static_cast<std::size_t>(i) * 4 + i] = {-0.5, 0.0};
  return {4, std::move(e)};
}

WalkState apply_coin(const WalkState& state, const CoinOperator& op) {
  if (op.dim() != state.coin_dim()) {
    throw std::invalid_argument("coin operator dimension " +
                                std::to_string(op.dim()) +
                                " does not match state coin dimension " +
                                std::to_string(state.coin_dim()));
  }
  WalkState out = state;
  apply_coin_in_place(out, op, out.radius(), out.radius());
  return out;
}

WalkState shift_axis(const WalkState& state, Axis axis) {
  if (state.coin_dim() != 2) {
    throw std::invalid_argument("shift_axis expects a 2-coin state");
  }
  if (state.time() + 1 > state.radius()) {
    throw_radius_overflow(state.time(), state.radius());
  }
  WalkState out = state;
  if (axis == Axis::x) {
    move_component_x(out.data(), out.side(), 2, 0, -1);
    move_component_x(out.data(), out.side(), 2, 1, +1);
  } else {
    move_component_y(out.data(), out.side(), 2, 0, -1);
    move_component_y(out.data(), out.side(), 2, 1, +1);
  }
  return out;
}

WalkState shift_2d(const WalkState& state) {
  if (state.coin_dim() != 4) {
    throw std::invalid_argument("shift_2d expects a 4-coin state");
  }
  if (state.time() + 1 > state.radius()) {
    throw_radius_overflow(state.time(), state.radius());
  }
  WalkState out = state;
  std::vector<Complex>& a = out.data();
  const int side = out.side();
  move_component_x(a, side, 4, 0, -1);
  move_component_y(a, side, 4, 0, -1);
  move_component_x(a, side, 4, 1, -1);
  move_component_y(a, side, 4, 1, +1);
  move_component_x(a, side, 4, 2, +1);
  move_component_y(a, side, 4, 2, -1);
  move_component_x(a, side, 4, 3, +1);
  move_component_y(a, side, 4, 3, +1);
  return out;
}

WalkState step(const WalkState& state, WalkKind kind) {
  return step(state, kind, default_coin(kind));
}

WalkState step(const WalkState& state, WalkKind kind, const CoinOperator& coin) {
  require_kind_dims(state, kind, coin);
  WalkState out = state;
  step_in_place(out, kind, coin);
  return out;
}

WalkState evolve(const WalkState& state, WalkKind kind, int steps,
                 const StepObserver& observer) {
  return evolve(state, kind, steps, observer, default_coin(kind));
}

WalkState evolve(const WalkState& state, WalkKind kind, int steps,
                 const StepObserver& observer, const CoinOperator& coin) {
  require_kind_dims(state, kind, coin);
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (state.time() + steps > state.radius()) {
    throw_radius_overflow(state.time() + steps - 1, state.radius());
  }
  WalkState out = state;
  for (int k = 0; k < steps; ++k) {
    step_in_place(out, kind, coin);
    if (observer) observer(out);
  }
  return out;
}

WalkState scalar_recurrence_oracle(WalkKind kind, const WalkState& init,
                                   int steps) {
  if (init.coin_dim() != coin_dim_for(kind)) {
    throw std::invalid_argument("oracle: state coin dimension does not match walk kind");
  }
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (init.time() + steps > init.radius()) {
    throw_radius_overflow(init.time() + steps - 1, init.radius());
  }

  const int radius = init.radius();
  WalkState cur = init;
  WalkState next(init.coin_dim(), radius);

  for (int k = 0; k < steps; ++k) {
    std::fill(next.data().begin(), next.data().end(), kZero);
    if (kind == WalkKind::grover) {
      // a_{x,y,k}(t+1) = sum_j g_{kj} a_{x+(-1)^m, y+(-1)^n, j}(t),
      // m = k/2, n = k mod 2, g_{kj} = 1/2 - delta_{kj}.
      for (int x = -radius; x <= radius; ++x) {
        for (int y = -radius; y <= radius; ++y) {
          for (int c = 0; c < 4; ++c) {
            const int sx = x + ((c / 2 == 0) ? 1 : -1);
            const int sy = y + ((c % 2 == 0) ? 1 : -1);
            if (!cur.in_grid(sx, sy)) continue;
            Complex acc = kZero;
            for (int j = 0; j < 4; ++j) {
              const double g = (c == j) ? -0.5 : 0.5;
              acc += g * cur.data()[cur.index(sx, sy, j)];
            }
            next.data()[next.index(x, y, c)] = acc;
          }
        }
      }
    } else {
      // b_{x,y,i}(t+1) = 1/2 { b_{x+1,y+s,0} + b_{x+1,y+s,1}
      //                        + s [ b_{x-1,y+s,0} - b_{x-1,y+s,1} ] },
      // s = (-1)^i.
      for (int x = -radius; x <= radius; ++x) {
        for (int y = -radius; y <= radius; ++y) {
          for (int c = 0; c < 2; ++c) {
            const int s = (c == 0) ? 1 : -1;
            const int sy = y + s;
            Complex acc = kZero;
            if (cur.in_grid(x + 1, sy)) {
              acc += cur.data()[cur.index(x + 1, sy, 0)] +
                     cur.data()[cur.index(x + 1, sy, 1)];
            }
            if (cur.in_grid(x - 1, sy)) {
              acc += static_cast<double>(s) *
                     (cur.data()[cur.index(x - 1, sy, 0)] -
                      cur.data()[cur.index(x - 1, sy, 1)]);
            }
            next.data()[next.index(x, y, c)] = 0.5 * acc;
          }
        }
      }
    }
    std::swap(cur.data(), next.data());
    cur.set_time(init.time() + k + 1);
  }
  return cur;
}

double max_amplitude_difference(const WalkState& a, const WalkState& b) {
  if (a.coin_dim() != b.coin_dim()) {
    throw std::invalid_argument("states differ in coin dimension");
  }
  const int radius = std::max(a.radius(), b.radius());
  double worst = 0.0;
  for (int x = -radius; x <= radius; ++x) {
    for (int y = -radius; y <= radius; ++y) {
      for (int c = 0; c < a.coin_dim(); ++c) {
        worst = std::max(worst, std::abs(a.amplitude_or_zero(x, y, c) -
                                         b.amplitude_or_zero(x, y, c)));
      }
    }
  }
  return worst;
}

}  // namespace qwalk
