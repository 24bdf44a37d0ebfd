#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>

#include "relaysim/buffers.hpp"
#include "relaysim/channel.hpp"
#include "relaysim/phase_align.hpp"
#include "relaysim/precoding.hpp"
#include "relaysim/rng.hpp"

namespace relaysim {

enum class Policy {
  BaSprs,           // precoded successive relaying, adaptive rate
  UpperBound,       // weighted-sum pair selection without IRI
  SfdMmrsIdeal,     // max-max successive relaying, IRI ignored
  SfdMmrsNonIdeal,  // max-max successive relaying, IRI treated as noise
  HdBrs,            // bufferless best relay (max-min), two-phase
  HdHrs,            // alternating max-max half duplex
  HdMlrs,           // max-link half duplex
  BaPars,           // phase-aligned successive relaying, fixed rate
  BaSor,            // successive relaying with IRI cancellation when decodable
};

std::string_view policy_name(Policy p) noexcept;
std::optional<Policy> parse_policy(std::string_view name) noexcept;

/// Single-link-per-slot schemes; their fixed-rate links need 2^(2 C0) - 1.
bool is_half_duplex(Policy p) noexcept;
/// Whether the policy is defined for the given rate mode.
bool supports(Policy p, BufferMode mode) noexcept;

enum class LinkMode {
  Precoded,      // successive pair, closed-form source precoder
  PhaseIC,       // successive pair, IRI amplified then cancelled
  PhaseIM,       // successive pair, IRI mitigated by anti-phase
  MRTOnly,       // successive pair, MRT at the source
  HalfDuplexRx,  // source -> rx only
  HalfDuplexTx,  // tx -> destination only
  TwoHop,        // bufferless source -> relay -> destination in one slot (rx == tx)
  Idle,
};

struct PairDecision {
  std::optional<int> rx;
  std::optional<int> tx;
  LinkMode mode = LinkMode::Idle;
  double gamma_sr = 0.0;
  double gamma_td = 0.0;
  double c_sr = 0.0;  // adaptive mode only, already capped
  double c_td = 0.0;  // adaptive mode only, already capped

  bool operator==(const PairDecision &) const = default;
};

struct PolicyConfig {
  double delta = 0.5;                // weight of the S->R rate
  double c0 = 1.0;                   // fixed rate, BPCU
  double source_power_factor = 1.0;  // source power multiplier for phase alignment
  IcFormula ic_formula = IcFormula::SignalModel;
  SinrDenominator sinr_denominator = SinrDenominator::ResidualAmplitude;
  std::optional<QuantizerConfig> quantizer;  // empty: ideal phase feedback

  /// Capture ratio of a successive-scheme link.
  double gamma0() const noexcept { return std::exp2(c0) - 1.0; }
  /// Capture ratio of a half-duplex link, which must carry twice the rate.
  double gamma0_hd() const noexcept { return std::exp2(2.0 * c0) - 1.0; }

  void validate() const;
  bool operator==(const PolicyConfig &) const = default;
};

PairDecision select_ba_sprs(const ChannelRealization &ch, const BufferState &buf,
                            const NetworkConfig &net, const PolicyConfig &cfg);

PairDecision select_upper_bound(const ChannelRealization &ch, const BufferState &buf,
                                const NetworkConfig &net, const PolicyConfig &cfg);

PairDecision select_sfd_mmrs(const ChannelRealization &ch, const BufferState &buf,
                             const NetworkConfig &net, const PolicyConfig &cfg, bool ideal);

/// Bufferless; `mode` decides whether rates are filled in.
PairDecision select_hd_brs(const ChannelRealization &ch, const NetworkConfig &net,
                           const PolicyConfig &cfg, BufferMode mode);

PairDecision select_hd_mlrs(const ChannelRealization &ch, const BufferState &buf,
                            const NetworkConfig &net, const PolicyConfig &cfg);

PairDecision select_hd_hrs(const ChannelRealization &ch, const BufferState &buf,
                           const NetworkConfig &net, const PolicyConfig &cfg, long slot);

/// Fixed rate only. `rng` picks the single link when no pair is feasible.
PairDecision select_ba_sor(const ChannelRealization &ch, const BufferState &buf,
                           const NetworkConfig &net, const PolicyConfig &cfg, Rng &rng);

/// Fixed rate only.
PairDecision select_ba_pars(const ChannelRealization &ch, const BufferState &buf,
                            const NetworkConfig &net, const PolicyConfig &cfg);

/// Dispatches to the selector for `p`.
PairDecision select(Policy p, const ChannelRealization &ch, const BufferState &buf,
                    const NetworkConfig &net, const PolicyConfig &cfg, long slot, Rng &rng);

/// Pair score for the exhaustive oracle; empty means "skip this pair".
using PairMetric = std::function<std::optional<double>(int rx, int tx)>;

struct OracleResult {
  PairDecision decision;  // rx/tx of the best pair, Idle when nothing was scored
  double score = -std::numeric_limits<double>::infinity();
  int pairs_scored = 0;
};

/// Plain double loop over all ordered relay pairs that pass the buffer rules,
/// keeping the first strict maximum of `metric`.
OracleResult oracle_exhaustive(const ChannelRealization &ch, const BufferState &buf,
                               const PairMetric &metric);

} // namespace relaysim
