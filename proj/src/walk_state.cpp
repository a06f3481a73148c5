#include "qwalk/walk_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void require_coin_dim(int coin_dim) {
  if (coin_dim != 2 && coin_dim != 4) {
    throw std::invalid_argument("coin dimension must be 2 or 4, got " +
                                std::to_string(coin_dim));
  }
}

}  // namespace

double CoinState::norm_squared() const {
  double n = 0.0;
  for (const Complex& a : amplitudes) n += std::norm(a);
  return n;
}

CoinState grover_initial_coin() {
  return CoinState{{{0.5, 0.0}, {-0.5, 0.0}, {-0.5, 0.0}, {0.5, 0.0}}};
}

CoinState alternate_initial_coin() {
  return CoinState{{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}}};
}

WalkState::WalkState(int coin_dim, int radius)
    : coin_dim_(coin_dim), radius_(radius), time_(0) {
  require_coin_dim(coin_dim);
  if (radius < 0) {
    throw std::invalid_argument("radius must be >= 0, got " +
                                std::to_string(radius));
  }
  amps_.assign(static_cast<std::size_t>(side()) * side() * coin_dim,
               Complex{0.0, 0.0});
}

Complex WalkState::amplitude(int x, int y, int c) const {
  if (!in_grid(x, y) || c < 0 || c >= coin_dim_) {
    throw std::out_of_range("amplitude index outside the stored grid");
  }
  return amps_[index(x, y, c)];
}

Complex WalkState::amplitude_or_zero(int x, int y, int c) const {
  if (!in_grid(x, y)) return {0.0, 0.0};
  if (c < 0 || c >= coin_dim_) {
    throw std::out_of_range("coin index out of range");
  }
  return amps_[index(x, y, c)];
}

void WalkState::set_amplitude(int x, int y, int c, Complex value) {
  if (!in_grid(x, y) || c < 0 || c >= coin_dim_) {
    throw std::out_of_range("amplitude index outside the stored grid");
  }
  amps_[index(x, y, c)] = value;
}

void WalkState::set_time(int t) {
  if (t < 0 || t > radius_) {
    throw std::invalid_argument("time must satisfy 0 <= t <= radius");
  }
  time_ = t;
}

WalkState new_state(int coin_dim, int radius, const CoinState& coin) {
  require_coin_dim(coin_dim);
  if (coin.dim() != coin_dim) {
    throw std::invalid_argument(
        "coin state dimension " + std::to_string(coin.dim()) +
        " does not match walk coin dimension " + std::to_string(coin_dim));
  }
  for (const Complex& a : coin.amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("coin amplitudes must be finite");
    }
  }
  if (std::abs(coin.norm_squared() - 1.0) > kCoinInputNormTol) {
    throw std::invalid_argument("coin state is not normalized (|norm^2 - 1| > 1e-9)");
  }
  WalkState state(coin_dim, radius);
  for (int c = 0; c < coin_dim; ++c) {
    state.set_amplitude(0, 0, c, coin.amplitudes[c]);
  }
  return state;
}

double norm_squared(const WalkState& state) {
  double n = 0.0;
  for (const Complex& a : state.data()) n += std::norm(a);
  return n;
}

double ProbabilityDistribution::sum() const {
  double s = 0.0;
  for (const auto& [site, p] : values) s += p;
  return s;
}

double ProbabilityDistribution::at_or_zero(int x, int y) const {
  auto it = values.find({x, y});
  return it == values.end() ? 0.0 : it->second;
}

ProbabilityDistribution probability_distribution(const WalkState& state) {
  ProbabilityDistribution dist;
  dist.radius = state.radius();
  const int bound = std::min(state.time(), state.radius());
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      double p = 0.0;
      for (int c = 0; c < state.coin_dim(); ++c) {
        p += std::norm(state.data()[state.index(x, y, c)]);
      }
      // clamp negative rounding residue; |.|^2 sums cannot go below 0
      if (p > 0.0) dist.values.emplace(std::make_pair(x, y), p);
    }
  }
  return dist;
}

double origin_probability(const WalkState& state) {
  double p = 0.0;
  for (int c = 0; c < state.coin_dim(); ++c) {
    p += std::norm(state.data()[state.index(0, 0, c)]);
  }
  return p;
}

}  // namespace qwalk
