#include "relaysim/engine.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relaysim {

namespace {

constexpr int kBatches = 20;
constexpr long kSampleEvery = 1024;

bool needs_pairs(Policy p) noexcept {
  return p == Policy::BaSprs || p == Policy::UpperBound || p == Policy::BaPars ||
         p == Policy::BaSor;
}

struct BatchStats {
  std::array<double, kBatches> delivered{};
  std::array<long, kBatches> attempts{};
  std::array<long, kBatches> successes{};
  std::array<long, kBatches> slots{};
};

double stderr_of(const std::array<double, kBatches> &x, int n) {
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += x[i];
  mean /= n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) ss += (x[i] - mean) * (x[i] - mean);
  return std::sqrt(ss / (n - 1) / n);
}

const SimConfig &validated(const SimConfig &cfg) {
  cfg.validate();
  return cfg;
}

class Runner {
public:
  explicit Runner(const SimConfig &cfg)
      : cfg_(validated(cfg)), buf_(cfg.net.num_relays, cfg.q_max, cfg.mode, initial_fill(cfg)),
        ch_rng_(cfg.seed), pol_rng_(derive_seed(cfg.seed, 1)) {
    initial_total_ = buf_.total();
  }

  SimResult run() {
    ChannelRealization ch(cfg_.net.num_relays, cfg_.net.num_antennas);
    const long measured = cfg_.slots - cfg_.warmup;
    for (long t = 0; t < cfg_.slots; ++t) {
      if (cfg_.channel_model)
        cfg_.channel_model(t, ch_rng_, ch);
      else
        draw_channels(cfg_.net, ch_rng_, ch);

      const PairDecision d = select(cfg_.policy, ch, buf_, cfg_.net, cfg_.policy_cfg, t, pol_rng_);
      const bool measuring = t >= cfg_.warmup;
      const int batch =
          measuring ? static_cast<int>((t - cfg_.warmup) * kBatches / measured) : -1;
      if (cfg_.mode == BufferMode::Adaptive)
        step_adaptive(d, batch);
      else
        step_fixed(d, batch);
      if (measuring) ++stats_.slots[batch];
      check(t);
    }
    return finish(measured);
  }

private:
  void step_adaptive(const PairDecision &d, int batch) {
    if (d.mode == LinkMode::TwoHop) {
      // Bufferless: what arrives at the relay leaves in the same slot.
      account(d.c_sr, d.c_td, batch);
      return;
    }
    update_adaptive(buf_, d.rx, d.tx, d.c_sr, d.c_td);
    account(d.rx ? d.c_sr : 0.0, d.tx ? d.c_td : 0.0, batch);
  }

  void step_fixed(const PairDecision &d, int batch) {
    const double g0 = is_half_duplex(cfg_.policy) ? cfg_.policy_cfg.gamma0_hd()
                                                  : cfg_.policy_cfg.gamma0();
    const double c0 = cfg_.policy_cfg.c0;
    long att = 0, ok = 0;
    if (d.mode == LinkMode::TwoHop) {
      const bool s_sr = d.gamma_sr >= g0;
      const bool s_td = s_sr && d.gamma_td >= g0;
      tally(1, s_sr, batch, true);
      if (s_sr) tally(1, s_td, batch, false);
      att = s_sr ? 2 : 1;
      ok = static_cast<long>(s_sr) + static_cast<long>(s_td);
      // Both hops of the bufferless packet share the slot pair: C0 per two slots.
      // A packet that fails the second hop is discarded by the relay.
      account(s_sr ? c0 / 2.0 : 0.0, s_td ? c0 / 2.0 : 0.0, batch);
      if (s_sr && !s_td) dropped_all_ += c0 / 2.0;
    } else {
      const bool s_sr = d.rx && d.gamma_sr >= g0;
      const bool s_td = d.tx && d.gamma_td >= g0;
      if (d.rx) tally(1, s_sr, batch, true);
      if (d.tx) tally(1, s_td, batch, false);
      att = static_cast<long>(d.rx.has_value()) + static_cast<long>(d.tx.has_value());
      ok = static_cast<long>(s_sr) + static_cast<long>(s_td);
      update_fixed(buf_, d.rx, d.tx, s_sr, s_td);
      account(s_sr ? c0 : 0.0, s_td ? c0 : 0.0, batch);
    }
    if (batch >= 0) {
      stats_.attempts[batch] += att;
      stats_.successes[batch] += ok;
    }
  }

  void tally(long attempts, bool success, int batch, bool sr) {
    if (batch < 0) return;
    if (sr) {
      res_.attempts_sr += attempts;
      res_.successes_sr += success ? 1 : 0;
    } else {
      res_.attempts_td += attempts;
      res_.successes_td += success ? 1 : 0;
    }
  }

  void account(double in, double out, int batch) {
    injected_all_ += in;
    delivered_all_ += out;
    if (batch < 0) return;
    res_.injected_bpcu += in;
    res_.delivered_bpcu += out;
    stats_.delivered[batch] += out;
  }

  void check(long t) {
    const double tol = 1e-9 * std::max(1.0, injected_all_ + initial_total_);
    if (delivered_all_ > initial_total_ + injected_all_ + tol) ++res_.invariant_violations;
    if (!cfg_.check_invariants && t % kSampleEvery != 0) return;
    for (double q : buf_.occupancies())
      if (!(q >= 0.0) || q > buf_.capacity()) ++res_.invariant_violations;
    const double held = buf_.total();
    if (std::abs(initial_total_ + injected_all_ - delivered_all_ - dropped_all_ - held) > tol)
      ++res_.invariant_violations;
  }

  SimResult finish(long measured) {
    res_.config = cfg_;
    res_.config.channel_model = nullptr;
    std::array<double, kBatches> rate{}, outage{};
    int n_rate = 0, n_out = 0;
    for (int b = 0; b < kBatches; ++b) {
      if (stats_.slots[b] == 0) continue;
      rate[n_rate++] = stats_.delivered[b] / static_cast<double>(stats_.slots[b]);
      if (stats_.attempts[b] > 0)
        outage[n_out++] = 1.0 - static_cast<double>(stats_.successes[b]) /
                                    static_cast<double>(stats_.attempts[b]);
    }
    res_.rate_stderr = stderr_of(rate, n_rate);
    res_.avg_rate_bpcu = res_.delivered_bpcu / static_cast<double>(measured);
    if (cfg_.mode == BufferMode::Fixed) {
      const long att = res_.attempts();
      res_.outage_prob =
          att > 0 ? 1.0 - static_cast<double>(res_.successes()) / static_cast<double>(att) : 0.0;
      res_.outage_stderr = stderr_of(outage, n_out);
    }
    return res_;
  }

  const SimConfig &cfg_;
  BufferState buf_;
  Rng ch_rng_;
  Rng pol_rng_;
  BatchStats stats_;
  SimResult res_;
  double initial_total_ = 0.0;
  double injected_all_ = 0.0;
  double delivered_all_ = 0.0;
  double dropped_all_ = 0.0;
};

} // namespace

void SimConfig::validate() const {
  net.validate();
  policy_cfg.validate();
  if (!supports(policy, mode))
    throw std::invalid_argument(std::string(policy_name(policy)) + " does not support " +
                                (mode == BufferMode::Adaptive ? "adaptive" : "fixed") +
                                " mode");
  if (needs_pairs(policy) && net.num_relays < 2)
    throw std::invalid_argument(std::string(policy_name(policy)) + " needs at least 2 relays");
  if (!(warmup >= 0 && slots > warmup))
    throw std::invalid_argument("slots must exceed warmup and warmup must be >= 0");
  if (!(q_max > 0.0)) throw std::invalid_argument("q_max must be positive");
  if (mode == BufferMode::Fixed && q_max != kInfiniteCapacity && q_max != std::floor(q_max))
    throw std::invalid_argument("q_max must be a whole packet count in fixed mode");
}

std::string SimConfig::row_label() const {
  return label.empty() ? std::string(policy_name(policy)) : label;
}

double initial_fill(const SimConfig &cfg) noexcept {
  if (cfg.mode == BufferMode::Adaptive || cfg.q_max == kInfiniteCapacity) return 0.0;
  return std::floor(cfg.q_max / 2.0);
}

SimResult run_adaptive(const SimConfig &cfg) {
  if (cfg.mode != BufferMode::Adaptive)
    throw std::invalid_argument("run_adaptive called with a fixed-mode configuration");
  return Runner(cfg).run();
}

SimResult run_fixed(const SimConfig &cfg) {
  if (cfg.mode != BufferMode::Fixed)
    throw std::invalid_argument("run_fixed called with an adaptive-mode configuration");
  return Runner(cfg).run();
}

SimResult run(const SimConfig &cfg) {
  return cfg.mode == BufferMode::Adaptive ? run_adaptive(cfg) : run_fixed(cfg);
}

} // namespace relaysim
