#pragma once

#include <utility>

#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Verdict carrier for the per-site amplitude identity checks.
struct ResidualReport {
  int t = 0;
  double max_abs_residual = 0.0;
  std::pair<int, int> worst_site{0, 0};
  long checks_evaluated = 0;
};

struct DistributionDistance {
  double max_abs = 0.0;
  double total_variation = 0.0;
};

/// Evaluates, at every lattice site, the two four-term amplitude sums that
/// vanish identically for the Grover walk started from the
/// grover_initial_coin() data:
///   a(x-1,y,0) + a(x-1,y,1) + a(x+1,y,2) + a(x+1,y,3)
///   a(x,y-1,0) + a(x,y-1,2) + a(x,y+1,1) + a(x,y+1,3)
/// Reports the largest |residual| and where it occurred.
ResidualReport check_alpha_identities(const WalkState& state);

/// Maps a 4-coin Grover state at time t onto the 2-coin alternate-walk
/// state it generates:
///   b0 = (-1)^t e^{i pi/4} ( a0 + i a2)
///   b1 = (-1)^t e^{i pi/4} (-a1 + i a3)
/// The phase is formed from the exact constant (1+i)/sqrt2 and a parity
/// branch; no trigonometric calls.
WalkState map_grover_to_alternate(const WalkState& state4);

/// max over (x, y, c') of |state2 - map_grover_to_alternate(state4)|.
ResidualReport check_beta_mapping(const WalkState& state4,
                                  const WalkState& state2);

/// max_abs = max over sites of |p - q|;
/// total_variation = (1/2) sum |p - q| over the union of supports.
DistributionDistance distribution_distance(const ProbabilityDistribution& p,
                                           const ProbabilityDistribution& q);

}  // namespace qwalk
