#include "qwalk/equivalence.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// (-1)^t e^{i pi/4}, built from the exact constant (1+i)/sqrt2.
Complex mapping_phase(int t) {
  const Complex eighth{kInvSqrt2, kInvSqrt2};
  return (t % 2 == 0) ? eighth : -eighth;
}

}  // namespace

ResidualReport check_alpha_identities(const WalkState& state) {
  if (state.coin_dim() != 4) {
    throw std::invalid_argument("alpha identities are defined for 4-coin states");
  }
  ResidualReport report;
  report.t = state.time();
  // One past the stored grid on every side: the four-term sums also
  // constrain sites whose neighbours are just inside the boundary.
  const int bound = state.radius() + 1;
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) {
      const Complex horiz = state.amplitude_or_zero(x - 1, y, 0) +
                            state.amplitude_or_zero(x - 1, y, 1) +
                            state.amplitude_or_zero(x + 1, y, 2) +
                            state.amplitude_or_zero(x + 1, y, 3);
      const Complex vert = state.amplitude_or_zero(x, y - 1, 0) +
                           state.amplitude_or_zero(x, y - 1, 2) +
                           state.amplitude_or_zero(x, y + 1, 1) +
                           state.amplitude_or_zero(x, y + 1, 3);
      report.checks_evaluated += 2;
      const double r = std::max(std::abs(horiz), std::abs(vert));
      if (r > report.max_abs_residual) {
        report.max_abs_residual = r;
        report.worst_site = {x, y};
      }
    }
  }
  return report;
}

WalkState map_grover_to_alternate(const WalkState& state4) {
  if (state4.coin_dim() != 4) {
    throw std::invalid_argument("mapping expects a 4-coin Grover state");
  }
  const Complex phase = mapping_phase(state4.time());
  const Complex i_unit{0.0, 1.0};
  WalkState out(2, state4.radius());
  out.set_time(state4.time());
  const int radius = state4.radius();
  for (int x = -radius; x <= radius; ++x) {
    for (int y = -radius; y <= radius; ++y) {
      const Complex a0 = state4.data()[state4.index(x, y, 0)];
      const Complex a1 = state4.data()[state4.index(x, y, 1)];
      const Complex a2 = state4.data()[state4.index(x, y, 2)];
      const Complex a3 = state4.data()[state4.index(x, y, 3)];
      out.data()[out.index(x, y, 0)] = phase * (a0 + i_unit * a2);
      out.data()[out.index(x, y, 1)] = phase * (-a1 + i_unit * a3);
    }
  }
  return out;
}

ResidualReport check_beta_mapping(const WalkState& state4,
                                  const WalkState& state2) {
  if (state4.coin_dim() != 4 || state2.coin_dim() != 2) {
    throw std::invalid_argument(
        "beta mapping check expects a 4-coin and a 2-coin state");
  }
  if (state4.time() != state2.time()) {
    throw std::invalid_argument("beta mapping check expects equal times");
  }
  const WalkState predicted = map_grover_to_alternate(state4);
  ResidualReport report;
  report.t = state2.time();
  const int radius = std::max(predicted.radius(), state2.radius());
  for (int x = -radius; x <= radius; ++x) {
    for (int y = -radius; y <= radius; ++y) {
      for (int c = 0; c < 2; ++c) {
        const double r = std::abs(state2.amplitude_or_zero(x, y, c) -
                                  predicted.amplitude_or_zero(x, y, c));
        ++report.checks_evaluated;
        if (r > report.max_abs_residual) {
          report.max_abs_residual = r;
          report.worst_site = {x, y};
        }
      }
    }
  }
  return report;
}

DistributionDistance distribution_distance(const ProbabilityDistribution& p,
                                           const ProbabilityDistribution& q) {
  std::set<std::pair<int, int>> sites;
  for (const auto& [site, value] : p.values) sites.insert(site);
  for (const auto& [site, value] : q.values) sites.insert(site);
  DistributionDistance d;
  double abs_sum = 0.0;
  for (const auto& [x, y] : sites) {
    const double diff = std::abs(p.at_or_zero(x, y) - q.at_or_zero(x, y));
    d.max_abs = std::max(d.max_abs, diff);
    abs_sum += diff;
  }
  d.total_variation = 0.5 * abs_sum;
  return d;
}

}  // namespace qwalk
