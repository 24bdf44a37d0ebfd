#pragma once

#include <complex>
#include <span>
#include <vector>

#include "relaysim/rng.hpp"

namespace relaysim {

using cplx = std::complex<double>;

/// Converts a dB quantity to linear scale.
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

/// Network size, transmit power, noise, and per-link-class channel variances.
/// All quantities are linear.
struct NetworkConfig {
  int num_relays = 2;    // K
  int num_antennas = 2;  // source antennas
  double power = 100.0;  // common transmit power P
  double noise = 1.0;    // receiver noise variance
  double var_sr = 1.0;   // source antenna -> relay
  double var_rr = 1.0;   // relay -> relay
  double var_rd = 1.0;   // relay -> destination

  double snr_linear() const noexcept { return power / noise; }

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;

  /// Builds a configuration with unit noise and P equal to the linear SNR.
  static NetworkConfig from_db(int relays, int antennas, double snr_db,
                               double sr_db, double rr_db, double rd_db);

  bool operator==(const NetworkConfig &) const = default;
};

/// Complex coefficients of one block-fading slot.
class ChannelRealization {
public:
  ChannelRealization() = default;
  ChannelRealization(int relays, int antennas);

  int relays() const noexcept { return relays_; }
  int antennas() const noexcept { return antennas_; }

  /// Coefficients from each source antenna to `relay`.
  std::span<const cplx> source_to(int relay) const noexcept {
    return {hs_.data() + static_cast<std::size_t>(relay) * antennas_,
            static_cast<std::size_t>(antennas_)};
  }
  std::span<cplx> source_to(int relay) noexcept {
    return {hs_.data() + static_cast<std::size_t>(relay) * antennas_,
            static_cast<std::size_t>(antennas_)};
  }

  /// Inter-relay coefficient from transmitting relay `from` to receiving relay `to`.
  cplx relay_to_relay(int from, int to) const noexcept {
    return hrr_[static_cast<std::size_t>(from) * relays_ + to];
  }
  cplx &relay_to_relay(int from, int to) noexcept {
    return hrr_[static_cast<std::size_t>(from) * relays_ + to];
  }

  cplx relay_to_dest(int relay) const noexcept { return hrd_[relay]; }
  cplx &relay_to_dest(int relay) noexcept { return hrd_[relay]; }

  /// Multiplies every power gain by `factor` (amplitudes by its square root).
  void scale_gains(double factor);

private:
  int relays_ = 0;
  int antennas_ = 0;
  std::vector<cplx> hs_;   // relays x antennas, row-major
  std::vector<cplx> hrr_;  // relays x relays, (from, to), diagonal unused
  std::vector<cplx> hrd_;  // relays
};

/// Squared Euclidean norm of a coefficient vector.
double gain(std::span<const cplx> h) noexcept;

/// One CN(0, var) coefficient.
cplx draw_coefficient(double variance, Rng &rng) noexcept;

/// Draws a fresh realization into `out`, resizing it if needed. Order of
/// consumption: source->relay row-major, relay->relay row-major skipping the
/// diagonal, relay->destination.
void draw_channels(const NetworkConfig &cfg, Rng &rng, ChannelRealization &out);
ChannelRealization draw_channels(const NetworkConfig &cfg, Rng &rng);

} // namespace relaysim
