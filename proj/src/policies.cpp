#include "relaysim/policies.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaysim {

namespace {

constexpr std::array<std::pair<Policy, std::string_view>, 9> kPolicyNames{{
    {Policy::BaSprs, "ba_sprs"},
    {Policy::UpperBound, "upper_bound"},
    {Policy::SfdMmrsIdeal, "sfd_mmrs_ideal"},
    {Policy::SfdMmrsNonIdeal, "sfd_mmrs_nonideal"},
    {Policy::HdBrs, "hd_brs"},
    {Policy::HdHrs, "hd_hrs"},
    {Policy::HdMlrs, "hd_mlrs"},
    {Policy::BaPars, "ba_pars"},
    {Policy::BaSor, "ba_sor"},
}};

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double rate(double gamma) noexcept { return std::log2(1.0 + gamma); }

double mrt_snr(const ChannelRealization &ch, int r, const NetworkConfig &net) noexcept {
  return gain(ch.source_to(r)) * net.power / net.noise;
}

double rd_snr(const ChannelRealization &ch, int t, const NetworkConfig &net) noexcept {
  return snr_rd(ch.relay_to_dest(t), net.power, net.noise);
}

void require_pairs(const ChannelRealization &ch) {
  if (ch.relays() < 2)
    throw std::invalid_argument("relay-pair selection needs at least 2 relays");
}

bool adaptive(const BufferState &buf) noexcept { return buf.mode() == BufferMode::Adaptive; }

PairDecision receive_only(const BufferState &buf, int r, double gamma) {
  PairDecision d;
  d.rx = r;
  d.mode = LinkMode::HalfDuplexRx;
  d.gamma_sr = gamma;
  if (adaptive(buf))
    d.c_sr = std::max(0.0, std::min(rate(gamma), buf.capacity() - buf.occupancy(r)));
  return d;
}

PairDecision transmit_only(const BufferState &buf, int t, double gamma) {
  PairDecision d;
  d.tx = t;
  d.mode = LinkMode::HalfDuplexTx;
  d.gamma_td = gamma;
  if (adaptive(buf)) d.c_td = std::max(0.0, std::min(rate(gamma), buf.occupancy(t)));
  return d;
}

PairDecision make_pair(const BufferState &buf, int r, int t, LinkMode mode, double g_sr,
                       double g_td) {
  PairDecision d;
  d.rx = r;
  d.tx = t;
  d.mode = mode;
  d.gamma_sr = g_sr;
  d.gamma_td = g_td;
  if (adaptive(buf)) {
    const CappedRates c =
        cap_rates(g_sr, g_td, buf.occupancy(r), buf.occupancy(t), buf.capacity());
    d.c_sr = c.c_sr;
    d.c_td = c.c_td;
  }
  return d;
}

/// Weighted link-rate score: capped rates in adaptive mode, raw rates otherwise.
double weighted_score(const BufferState &buf, const PolicyConfig &cfg, std::optional<int> r,
                      std::optional<int> t, double g_sr, double g_td) noexcept {
  double c_sr = r ? rate(g_sr) : 0.0;
  double c_td = t ? rate(g_td) : 0.0;
  if (adaptive(buf)) {
    if (r) c_sr = std::max(0.0, std::min(c_sr, buf.capacity() - buf.occupancy(*r)));
    if (t) c_td = std::max(0.0, std::min(c_td, buf.occupancy(*t)));
  }
  return cfg.delta * c_sr + (1.0 - cfg.delta) * c_td;
}

/// Best relay by `score` among those passing `eligible`; lowest index on ties.
template <class Eligible, class Score>
std::optional<int> best_relay(int K, Eligible eligible, Score score,
                              std::optional<int> exclude = std::nullopt) {
  std::optional<int> best;
  double best_v = kNegInf;
  for (int k = 0; k < K; ++k) {
    if (k == exclude || !eligible(k)) continue;
    const double v = score(k);
    if (!best || v > best_v) {
      best = k;
      best_v = v;
    }
  }
  return best;
}

/// Adaptive-mode fallback when no relay can receive: best capped R->D link.
PairDecision transmit_fallback(const ChannelRealization &ch, const BufferState &buf,
                               const NetworkConfig &net) {
  const int K = ch.relays();
  auto t = best_relay(
      K, [&](int k) { return buf.has_data(k); },
      [&](int k) { return std::min(rate(rd_snr(ch, k, net)), buf.occupancy(k)); });
  if (!t) return {};
  return transmit_only(buf, *t, rd_snr(ch, *t, net));
}

/// Exhaustive weighted-sum search shared by the precoded scheme and its
/// interference-free bound. A relay with an empty buffer stays silent, so it
/// causes no IRI.
template <class SinrSr>
PairDecision weighted_pair_search(const ChannelRealization &ch, const BufferState &buf,
                                  const NetworkConfig &net, const PolicyConfig &cfg,
                                  LinkMode mode, SinrSr sinr_sr) {
  require_pairs(ch);
  const int K = ch.relays();
  PairDecision best;
  double best_score = kNegInf;
  bool found = false;
  for (int r = 0; r < K; ++r) {
    if (buf.full(r)) continue;
    const double a = gain(ch.source_to(r));
    for (int t = 0; t < K; ++t) {
      if (t == r) continue;
      const bool silent = buf.occupancy(t) == 0.0;
      const double g_sr = sinr_sr(a, r, t, silent);
      const double g_td = rd_snr(ch, t, net);
      PairDecision d = make_pair(buf, r, t, mode, g_sr, g_td);
      const double score = cfg.delta * d.c_sr + (1.0 - cfg.delta) * d.c_td;
      if (!found || score > best_score) {
        best = d;
        best_score = score;
        found = true;
      }
    }
  }
  if (!found) return transmit_fallback(ch, buf, net);
  return best;
}

} // namespace

std::string_view policy_name(Policy p) noexcept {
  for (const auto &[policy, name] : kPolicyNames)
    if (policy == p) return name;
  return "unknown";
}

std::optional<Policy> parse_policy(std::string_view name) noexcept {
  for (const auto &[policy, n] : kPolicyNames)
    if (n == name) return policy;
  return std::nullopt;
}

bool is_half_duplex(Policy p) noexcept {
  return p == Policy::HdBrs || p == Policy::HdHrs || p == Policy::HdMlrs;
}

bool supports(Policy p, BufferMode mode) noexcept {
  switch (p) {
  case Policy::BaSprs:
  case Policy::UpperBound:
    return mode == BufferMode::Adaptive;
  case Policy::BaPars:
  case Policy::BaSor:
    return mode == BufferMode::Fixed;
  default:
    return true;
  }
}

void PolicyConfig::validate() const {
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must be in [0, 1]");
  if (!(c0 > 0.0) || !std::isfinite(c0)) throw std::invalid_argument("c0 must be positive");
  if (!(source_power_factor > 0.0) || !std::isfinite(source_power_factor))
    throw std::invalid_argument("source_power_factor must be positive");
  if (quantizer && (quantizer->bits < 1 || quantizer->bits > 30))
    throw std::invalid_argument("phase quantizer bits must be in [1, 30]");
}

PairDecision select_ba_sprs(const ChannelRealization &ch, const BufferState &buf,
                            const NetworkConfig &net, const PolicyConfig &cfg) {
  return weighted_pair_search(
      ch, buf, net, cfg, LinkMode::Precoded, [&](double a, int r, int t, bool silent) {
        const double b = silent ? 0.0 : std::norm(ch.relay_to_relay(t, r));
        return precoded_sinr(a, b, net.power, net.noise, cfg.sinr_denominator);
      });
}

PairDecision select_upper_bound(const ChannelRealization &ch, const BufferState &buf,
                                const NetworkConfig &net, const PolicyConfig &cfg) {
  return weighted_pair_search(ch, buf, net, cfg, LinkMode::MRTOnly,
                              [&](double a, int, int, bool) { return a * net.power / net.noise; });
}

PairDecision select_sfd_mmrs(const ChannelRealization &ch, const BufferState &buf,
                             const NetworkConfig &net, const PolicyConfig &cfg, bool ideal) {
  const int K = ch.relays();
  auto can_rx = [&](int k) { return !buf.full(k); };
  auto can_tx = [&](int k) { return buf.has_data(k); };
  auto sr_gain = [&](int k) { return gain(ch.source_to(k)); };
  auto rd_gain = [&](int k) { return std::norm(ch.relay_to_dest(k)); };
  auto pair_sinr = [&](int r, int t) {
    const double signal = gain(ch.source_to(r)) * net.power;
    if (ideal) return signal / net.noise;
    return signal / (std::norm(ch.relay_to_relay(t, r)) * net.power + net.noise);
  };

  const auto r1 = best_relay(K, can_rx, sr_gain);
  const auto t1 = best_relay(K, can_tx, rd_gain);
  if (!r1 && !t1) return {};
  if (!t1) return receive_only(buf, *r1, mrt_snr(ch, *r1, net));
  if (!r1) return transmit_only(buf, *t1, rd_snr(ch, *t1, net));
  if (*r1 != *t1)
    return make_pair(buf, *r1, *t1, LinkMode::MRTOnly, pair_sinr(*r1, *t1), rd_snr(ch, *t1, net));

  // Same relay is best on both links: swap in a runner-up on one side.
  const auto r2 = best_relay(K, can_rx, sr_gain, *r1);
  const auto t2 = best_relay(K, can_tx, rd_gain, *t1);
  std::optional<RelayPair> pick;
  double pick_score = kNegInf;
  auto consider = [&](int r, int t) {
    const double s = weighted_score(buf, cfg, r, t, pair_sinr(r, t), rd_snr(ch, t, net));
    if (!pick || s > pick_score ||
        (s == pick_score && (r < pick->rx || (r == pick->rx && t < pick->tx)))) {
      pick = RelayPair{r, t};
      pick_score = s;
    }
  };
  if (r2) consider(*r2, *t1);
  if (t2) consider(*r1, *t2);
  if (pick)
    return make_pair(buf, pick->rx, pick->tx, LinkMode::MRTOnly, pair_sinr(pick->rx, pick->tx),
                     rd_snr(ch, pick->tx, net));

  // Only one relay is usable at all: run a single link on it.
  const double g_sr = mrt_snr(ch, *r1, net);
  const double g_td = rd_snr(ch, *t1, net);
  const double s_rx = weighted_score(buf, cfg, *r1, std::nullopt, g_sr, 0.0);
  const double s_tx = weighted_score(buf, cfg, std::nullopt, *t1, 0.0, g_td);
  return s_rx >= s_tx ? receive_only(buf, *r1, g_sr) : transmit_only(buf, *t1, g_td);
}

PairDecision select_hd_brs(const ChannelRealization &ch, const NetworkConfig &net,
                           const PolicyConfig &, BufferMode mode) {
  const int K = ch.relays();
  const auto k = best_relay(
      K, [](int) { return true; },
      [&](int j) { return std::min(mrt_snr(ch, j, net), rd_snr(ch, j, net)); });
  PairDecision d;
  d.rx = *k;
  d.tx = *k;
  d.mode = LinkMode::TwoHop;
  d.gamma_sr = mrt_snr(ch, *k, net);
  d.gamma_td = rd_snr(ch, *k, net);
  if (mode == BufferMode::Adaptive) {
    d.c_sr = 0.5 * rate(std::min(d.gamma_sr, d.gamma_td));
    d.c_td = d.c_sr;
  }
  return d;
}

PairDecision select_hd_mlrs(const ChannelRealization &ch, const BufferState &buf,
                            const NetworkConfig &net, const PolicyConfig &) {
  const int K = ch.relays();
  // Links enumerated as S->0..K-1 then 0..K-1->D; first maximum wins.
  std::optional<int> best_rx, best_tx;
  double best = kNegInf;
  bool found = false;
  for (int k = 0; k < K; ++k) {
    if (buf.full(k)) continue;
    const double g = mrt_snr(ch, k, net);
    if (!found || g > best) {
      best = g;
      best_rx = k;
      found = true;
    }
  }
  for (int k = 0; k < K; ++k) {
    if (!buf.has_data(k)) continue;
    const double g = rd_snr(ch, k, net);
    if (!found || g > best) {
      best = g;
      best_rx.reset();
      best_tx = k;
      found = true;
    }
  }
  if (best_tx) return transmit_only(buf, *best_tx, best);
  if (best_rx) return receive_only(buf, *best_rx, best);
  return {};
}

PairDecision select_hd_hrs(const ChannelRealization &ch, const BufferState &buf,
                           const NetworkConfig &net, const PolicyConfig &cfg, long slot) {
  const int K = ch.relays();
  const auto r = best_relay(
      K, [&](int k) { return !buf.full(k); }, [&](int k) { return mrt_snr(ch, k, net); });
  const auto t = best_relay(
      K, [&](int k) { return buf.has_data(k); }, [&](int k) { return rd_snr(ch, k, net); });
  const bool receive_slot = slot % 2 == 0;
  if (receive_slot && r) return receive_only(buf, *r, mrt_snr(ch, *r, net));
  if (!receive_slot && t) return transmit_only(buf, *t, rd_snr(ch, *t, net));
  if (r) return receive_only(buf, *r, mrt_snr(ch, *r, net));
  if (t) return transmit_only(buf, *t, rd_snr(ch, *t, net));
  return select_hd_brs(ch, net, cfg, buf.mode());
}

PairDecision select_ba_sor(const ChannelRealization &ch, const BufferState &buf,
                           const NetworkConfig &net, const PolicyConfig &cfg, Rng &rng) {
  require_pairs(ch);
  const int K = ch.relays();
  const double gamma0 = cfg.gamma0();
  PairDecision best;
  double best_metric = kNegInf;
  bool found = false;
  for (const RelayPair &p : feasible_pairs(buf)) {
    const double s = gain(ch.source_to(p.rx)) * net.power;
    const double i = std::norm(ch.relay_to_relay(p.tx, p.rx)) * net.power;
    const bool decodable = i / (s + net.noise) >= gamma0;
    const double g_sr = decodable ? s / net.noise : s / (i + net.noise);
    const double g_td = rd_snr(ch, p.tx, net);
    const double metric = std::min(g_sr, g_td);
    if (!found || metric > best_metric) {
      best = make_pair(buf, p.rx, p.tx, LinkMode::MRTOnly, g_sr, g_td);
      best_metric = metric;
      found = true;
    }
  }
  if (found) return best;

  // No pair: one eligible link chosen uniformly at random.
  std::vector<std::pair<bool, int>> links;  // (is_rx, relay)
  for (int k = 0; k < K; ++k)
    if (!buf.full(k)) links.emplace_back(true, k);
  for (int k = 0; k < K; ++k)
    if (buf.has_data(k)) links.emplace_back(false, k);
  if (links.empty()) return {};
  const auto [is_rx, k] = links[rng.index(links.size())];
  return is_rx ? receive_only(buf, k, mrt_snr(ch, k, net))
               : transmit_only(buf, k, rd_snr(ch, k, net));
}

PairDecision select_ba_pars(const ChannelRealization &ch, const BufferState &buf,
                            const NetworkConfig &net, const PolicyConfig &cfg) {
  require_pairs(ch);
  const int K = ch.relays();
  const int second = ch.antennas() >= 2 ? 1 : 0;  // single antenna carries both streams
  PhaseAlignParams params;
  params.p_source = cfg.source_power_factor * net.power;
  params.p_relay = net.power;
  params.noise = net.noise;
  params.gamma0 = cfg.gamma0();
  params.formula = cfg.ic_formula;
  params.quantizer = cfg.quantizer;

  PairDecision best;
  double best_metric = kNegInf;
  bool found = false;
  for (const RelayPair &p : feasible_pairs(buf)) {
    const auto hs = ch.source_to(p.rx);
    const PhaseDecision pd = decide_phase(hs[0], hs[second], ch.relay_to_relay(p.tx, p.rx), params);
    const double g_td = rd_snr(ch, p.tx, net);
    const double metric = std::min(pd.gamma_r, g_td);
    if (!found || metric > best_metric) {
      const LinkMode mode =
          pd.mode == InterferenceMode::CancelViaDecode ? LinkMode::PhaseIC : LinkMode::PhaseIM;
      best = make_pair(buf, p.rx, p.tx, mode, pd.gamma_r, g_td);
      best_metric = metric;
      found = true;
    }
  }
  if (found) return best;

  // No pair: strongest single link. Reception co-phases both antennas onto
  // the source packet, each at half the source power.
  auto rx_snr = [&](int k) {
    const auto hs = ch.source_to(k);
    if (second == 0) return std::norm(hs[0]) * params.p_source / net.noise;
    const double amp = std::abs(hs[0]) + std::abs(hs[1]);
    return amp * amp * (params.p_source / 2.0) / net.noise;
  };
  const auto r = best_relay(K, [&](int k) { return !buf.full(k); }, rx_snr);
  const auto t = best_relay(K, [&](int k) { return buf.has_data(k); },
                            [&](int k) { return rd_snr(ch, k, net); });
  if (r && (!t || rx_snr(*r) >= rd_snr(ch, *t, net))) return receive_only(buf, *r, rx_snr(*r));
  if (t) return transmit_only(buf, *t, rd_snr(ch, *t, net));
  return {};
}

PairDecision select(Policy p, const ChannelRealization &ch, const BufferState &buf,
                    const NetworkConfig &net, const PolicyConfig &cfg, long slot, Rng &rng) {
  switch (p) {
  case Policy::BaSprs:
    return select_ba_sprs(ch, buf, net, cfg);
  case Policy::UpperBound:
    return select_upper_bound(ch, buf, net, cfg);
  case Policy::SfdMmrsIdeal:
    return select_sfd_mmrs(ch, buf, net, cfg, true);
  case Policy::SfdMmrsNonIdeal:
    return select_sfd_mmrs(ch, buf, net, cfg, false);
  case Policy::HdBrs:
    return select_hd_brs(ch, net, cfg, buf.mode());
  case Policy::HdHrs:
    return select_hd_hrs(ch, buf, net, cfg, slot);
  case Policy::HdMlrs:
    return select_hd_mlrs(ch, buf, net, cfg);
  case Policy::BaPars:
    return select_ba_pars(ch, buf, net, cfg);
  case Policy::BaSor:
    return select_ba_sor(ch, buf, net, cfg, rng);
  }
  throw std::logic_error("unhandled policy");
}

OracleResult oracle_exhaustive(const ChannelRealization &ch, const BufferState &buf,
                               const PairMetric &metric) {
  OracleResult out;
  const int K = ch.relays();
  const auto q = buf.occupancies();
  for (int r = 0; r < K; ++r) {
    for (int t = 0; t < K; ++t) {
      if (r == t) continue;
      if (!(q[r] < buf.capacity())) continue;
      if (buf.mode() == BufferMode::Fixed && q[t] < 1.0) continue;
      const std::optional<double> s = metric(r, t);
      if (!s) continue;
      ++out.pairs_scored;
      if (!out.decision.rx || *s > out.score) {
        out.score = *s;
        out.decision.rx = r;
        out.decision.tx = t;
        out.decision.mode = LinkMode::MRTOnly;
      }
    }
  }
  return out;
}

} // namespace relaysim
