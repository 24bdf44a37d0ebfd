#include "relaysim/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysim {

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

void NetworkConfig::validate() const {
  auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (num_relays < 1)
    throw std::invalid_argument("relay count must be >= 1");
  if (num_antennas < 1)
    throw std::invalid_argument("source antenna count must be >= 1");
  if (!(std::isfinite(power) && power > 0.0))
    throw std::invalid_argument("transmit power must be positive and finite");
  if (!(std::isfinite(noise) && noise > 0.0))
    throw std::invalid_argument("noise variance must be positive and finite");
  if (!finite_nonneg(var_sr) || !finite_nonneg(var_rr) || !finite_nonneg(var_rd))
    throw std::invalid_argument("channel variances must be finite and non-negative");
}

NetworkConfig NetworkConfig::from_db(int relays, int antennas, double snr_db,
                                     double sr_db, double rr_db, double rd_db) {
  NetworkConfig cfg;
  cfg.num_relays = relays;
  cfg.num_antennas = antennas;
  cfg.noise = 1.0;
  cfg.power = db_to_linear(snr_db);
  cfg.var_sr = db_to_linear(sr_db);
  cfg.var_rr = db_to_linear(rr_db);
  cfg.var_rd = db_to_linear(rd_db);
  return cfg;
}

ChannelRealization::ChannelRealization(int relays, int antennas)
    : relays_(relays), antennas_(antennas),
      hs_(static_cast<std::size_t>(relays) * antennas),
      hrr_(static_cast<std::size_t>(relays) * relays),
      hrd_(static_cast<std::size_t>(relays)) {}

void ChannelRealization::scale_gains(double factor) {
  const double amp = std::sqrt(factor);
  for (auto &h : hs_) h *= amp;
  for (auto &h : hrr_) h *= amp;
  for (auto &h : hrd_) h *= amp;
}

double gain(std::span<const cplx> h) noexcept {
  double s = 0.0;
  for (const auto &x : h) s += std::norm(x);
  return s;
}

cplx draw_coefficient(double variance, Rng &rng) noexcept {
  const auto [re, im] = rng.gauss_pair();
  const double sd = std::sqrt(variance / 2.0);
  return {sd * re, sd * im};
}

void draw_channels(const NetworkConfig &cfg, Rng &rng, ChannelRealization &out) {
  const int K = cfg.num_relays;
  const int nu = cfg.num_antennas;
  if (out.relays() != K || out.antennas() != nu) out = ChannelRealization(K, nu);

  for (int k = 0; k < K; ++k)
    for (auto &h : out.source_to(k)) h = draw_coefficient(cfg.var_sr, rng);
  for (int t = 0; t < K; ++t)
    for (int r = 0; r < K; ++r)
      out.relay_to_relay(t, r) = (t == r) ? cplx{} : draw_coefficient(cfg.var_rr, rng);
  for (int k = 0; k < K; ++k) out.relay_to_dest(k) = draw_coefficient(cfg.var_rd, rng);
}

ChannelRealization draw_channels(const NetworkConfig &cfg, Rng &rng) {
  ChannelRealization out(cfg.num_relays, cfg.num_antennas);
  draw_channels(cfg, rng, out);
  return out;
}

} // namespace relaysim
