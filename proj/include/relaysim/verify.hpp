#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace relaysim {

/// Outcome of one randomized oracle suite. `worst` is the largest error seen,
/// expressed as a multiple of its tolerance, so a suite passes when
/// failures == 0 and worst <= 1.
struct OracleReport {
  std::string name;
  long draws = 0;
  long failures = 0;
  double worst = 0.0;

  bool passed() const noexcept { return failures == 0; }
  bool operator==(const OracleReport &) const = default;
};

/// Draw i uses its own stream derived from (seed, i), so the parallel and
/// serial versions see identical inputs and produce identical reports.

/// Closed-form omega against a 1e-4 grid, plus precoder unit power and
/// interference shaping, over nu in {1, 2, 4} and SNR in {0, 10, 20} dB.
OracleReport verify_omega(long draws, std::uint64_t seed, bool parallel);
/// Joint source power and omega against a power x omega grid.
OracleReport verify_joint_power(long draws, std::uint64_t seed, bool parallel);
/// Anti-phase and co-phase extremes against a 2^16-point phase grid.
OracleReport verify_phase(long draws, std::uint64_t seed, bool parallel);
/// a = b = rho = 1 spot value.
OracleReport verify_spot();

std::vector<OracleReport> verify_all(long draws, std::uint64_t seed, bool parallel);

} // namespace relaysim
