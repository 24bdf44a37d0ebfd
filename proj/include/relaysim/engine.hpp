#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "relaysim/buffers.hpp"
#include "relaysim/channel.hpp"
#include "relaysim/policies.hpp"
#include "relaysim/rng.hpp"

namespace relaysim {

/// Replaces the Rayleigh draw for one slot. Used to inject deterministic channels.
using ChannelModel = std::function<void(long slot, Rng &rng, ChannelRealization &out)>;

struct SimConfig {
  NetworkConfig net;
  Policy policy = Policy::BaSprs;
  PolicyConfig policy_cfg;
  BufferMode mode = BufferMode::Adaptive;
  long slots = 1'000'000;  // W, including warm-up
  long warmup = 10'000;    // W0
  std::uint64_t seed = 1;
  double q_max = kInfiniteCapacity;
  bool paired_channels = true;
  /// Scan every buffer after every slot instead of every 1024th slot.
  bool check_invariants = false;
  std::string label;   // row label; policy name when empty
  double snr_db = 0.0;       // echoed into the result table
  double sigma_rr_db = 0.0;  // echoed into the result table
  ChannelModel channel_model;  // empty: i.i.d. Rayleigh

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
  std::string row_label() const;
};

struct SimResult {
  SimConfig config;
  double avg_rate_bpcu = 0.0;
  std::optional<double> outage_prob;  // fixed mode only
  long attempts_sr = 0;
  long attempts_td = 0;
  long successes_sr = 0;
  long successes_td = 0;
  double delivered_bpcu = 0.0;  // post-warm-up, end to end
  double injected_bpcu = 0.0;   // post-warm-up, source to relays
  double rate_stderr = 0.0;     // batch-means standard error of avg_rate_bpcu
  double outage_stderr = 0.0;
  long invariant_violations = 0;

  long attempts() const noexcept { return attempts_sr + attempts_td; }
  long successes() const noexcept { return successes_sr + successes_td; }
};

SimResult run_adaptive(const SimConfig &cfg);
SimResult run_fixed(const SimConfig &cfg);
/// Dispatches on cfg.mode.
SimResult run(const SimConfig &cfg);

/// Packets per relay at the start of a fixed-rate run: half the buffer, or
/// none for unbounded buffers.
double initial_fill(const SimConfig &cfg) noexcept;

} // namespace relaysim
