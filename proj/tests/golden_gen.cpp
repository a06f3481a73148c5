// Regenerates the golden entanglement trajectories in tests/golden/.
// States are produced by the scalar-recurrence route, independent of the
// operator-composition engine the acceptance suite exercises.
//
//   qwalk_golden_gen [output-dir]

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qwalk/entanglement.hpp"
#include "qwalk/walk_engine.hpp"
#include "qwalk/walk_state.hpp"

namespace {

constexpr int kMaxTime = 20;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find_first_not_of("-0123456789") == std::string::npos) s += ".0";
  return s;
}

bool write_series(const std::string& path, const std::vector<double>& series) {
  std::ofstream file(path);
  if (!file) {
    std::cerr << "cannot open " << path << "\n";
    return false;
  }
  file << "t,value\n";
  for (std::size_t t = 0; t < series.size(); ++t) {
    file << t << "," << format_double(series[t]) << "\n";
  }
  return file.good();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "tests/golden";
  bool ok = true;
  for (const qwalk::WalkKind kind :
       {qwalk::WalkKind::grover, qwalk::WalkKind::alternate}) {
    const int dim = qwalk::coin_dim_for(kind);
    const qwalk::CoinState coin = kind == qwalk::WalkKind::grover
                                      ? qwalk::grover_initial_coin()
                                      : qwalk::alternate_initial_coin();
    qwalk::WalkState state = qwalk::new_state(dim, kMaxTime, coin);
    std::vector<double> entropy;
    std::vector<double> negativity;
    for (int t = 0; t <= kMaxTime; ++t) {
      entropy.push_back(qwalk::coin_position_entanglement(state));
      negativity.push_back(qwalk::xy_negativity(state));
      if (t < kMaxTime) {
        state = qwalk::scalar_recurrence_oracle(kind, state, 1);
      }
    }
    const std::string name = qwalk::walk_name(kind);
    ok = write_series(dir + "/entropy_" + name + ".csv", entropy) && ok;
    ok = write_series(dir + "/negativity_" + name + ".csv", negativity) && ok;
    std::cout << name << ": wrote " << entropy.size() << " entropy and "
              << negativity.size() << " negativity points\n";
  }
  return ok ? 0 : 1;
}
