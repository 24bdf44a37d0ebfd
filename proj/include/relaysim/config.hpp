#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaysim/sweep.hpp"

namespace relaysim {

/// Bad configuration input. The message names the offending key.
class ConfigError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A run or sweep as written by the user. dB values stay in dB here; the
/// conversion to linear happens in to_sweep().
struct RunSpec {
  std::vector<std::string> policies{"ba_sprs"};  // policy names; a "_2p" suffix doubles source power
  BufferMode mode = BufferMode::Adaptive;
  std::vector<int> relays{2};
  int antennas = 2;
  std::vector<double> snr_db{20.0};
  double sigma_sr_db = 0.0;
  std::vector<double> sigma_rr_db{0.0};
  double sigma_rd_db = 0.0;
  std::vector<double> q_max{kInfiniteCapacity};
  std::vector<double> c0{1.0};
  double delta = 0.5;
  long slots = 1'000'000;
  long warmup = 10'000;
  std::uint64_t seed = 1;
  bool paired_channels = true;
  double source_power_factor = 1.0;
  IcFormula ic_formula = IcFormula::SignalModel;
  SinrDenominator sinr_denominator = SinrDenominator::ResidualAmplitude;
  int phase_bits = 0;  // 0: ideal phase feedback
  std::string output;

  bool operator==(const RunSpec &) const = default;

  SweepSpec to_sweep() const;
};

RunSpec parse_config_text(const std::string &json);
RunSpec parse_config(const std::filesystem::path &path);
std::string serialize_config(const RunSpec &spec);

/// Preset sweep for one of the reproduced figures (2 to 7). Throws ConfigError
/// for other numbers.
RunSpec figure_preset(int figure);

/// Resolves a policy name, including the "_2p" double-source-power suffix.
PolicyVariant parse_variant(const std::string &name, double source_power_factor = 1.0);

} // namespace relaysim
