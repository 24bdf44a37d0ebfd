#include "relaysim/phase_align.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relaysim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace

PhaseSolution phase_min(cplx h_s2r, cplx h_tr) noexcept {
  const cplx z = std::conj(h_s2r) * h_tr;
  const double mag = std::abs(z);
  if (mag == 0.0) return {cplx{1.0, 0.0}, true};
  return {-z / mag, false};
}

PhaseSolution phase_max(cplx h_s2r, cplx h_tr) noexcept {
  PhaseSolution s = phase_min(h_s2r, h_tr);
  if (!s.degenerate) s.unit = -s.unit;
  return s;
}

double phase_angle(cplx unit) noexcept {
  double phi = std::arg(unit);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

cplx quantize_phase(cplx unit, QuantizerConfig q) {
  if (q.bits < 1 || q.bits > 30)
    throw std::invalid_argument("quantize_phase: bits must be in [1, 30]");
  const long levels = 1L << q.bits;
  const double step = kTwoPi / static_cast<double>(levels);
  long k = static_cast<long>(std::ceil(phase_angle(unit) / step - 0.5));
  if (k >= levels) k -= levels;
  return std::polar(1.0, static_cast<double>(k) * step);
}

double residual_norm(cplx h_s2r, cplx h_tr, cplx unit) noexcept {
  return std::abs(h_s2r * unit * kInvSqrt2 + h_tr);
}

double sinr_im(cplx h_s1r, cplx h_s2r, cplx h_tr, double power, double noise,
               cplx unit) noexcept {
  const double r = residual_norm(h_s2r, h_tr, unit);
  return std::norm(h_s1r) * (power / 2.0) / (r * r * power + noise);
}

double sinr_im(cplx h_s1r, cplx h_s2r, cplx h_tr, double p_source, double p_relay,
               double noise, std::optional<cplx> unit) noexcept {
  cplx residual = std::sqrt(p_relay) * h_tr;
  if (unit) residual += std::sqrt(p_source / 2.0) * h_s2r * *unit;
  return std::norm(h_s1r) * (p_source / 2.0) / (std::norm(residual) + noise);
}

IcCheck ic_check(cplx h_s1r, cplx h_s2r, cplx h_tr, double p_source, double p_relay,
                 double noise, double gamma0, cplx unit, IcFormula formula) {
  if (!(gamma0 > 0.0)) throw std::invalid_argument("ic_check: gamma0 must be positive");
  IcCheck out;
  const double half = p_source / 2.0;
  if (formula == IcFormula::SignalModel) {
    const cplx boosted = std::sqrt(p_relay) * h_tr + std::sqrt(half) * h_s2r * unit;
    out.gamma_ic = std::norm(boosted) / (half * std::norm(h_s1r) + noise);
  } else {
    out.gamma_ic = std::norm(h_tr) * p_relay / (std::norm(h_s1r + h_s2r * unit) * half + noise);
  }
  out.feasible = out.gamma_ic >= gamma0;
  out.post_ic_snr = std::norm(h_s1r) * half / noise;
  return out;
}

IcCheck ic_check(cplx h_s1r, cplx h_s2r, cplx h_tr, double power, double noise,
                 double gamma0, IcFormula formula) {
  return ic_check(h_s1r, h_s2r, h_tr, power, power, noise, gamma0,
                  phase_max(h_s2r, h_tr).unit, formula);
}

double snr_rd(cplx h_td, double power, double noise) noexcept {
  return std::norm(h_td) * power / noise;
}

PhaseDecision decide_phase(cplx h_s1r, cplx h_s2r, cplx h_tr, const PhaseAlignParams &p) {
  PhaseDecision d;
  if (h_tr == cplx{}) {
    // No interferer: the second antenna stays silent.
    d.gamma_r = sinr_im(h_s1r, h_s2r, h_tr, p.p_source, p.p_relay, p.noise, std::nullopt);
    return d;
  }

  const cplx anti = phase_min(h_s2r, h_tr).unit;
  const cplx boost = phase_max(h_s2r, h_tr).unit;
  const IcCheck ic =
      ic_check(h_s1r, h_s2r, h_tr, p.p_source, p.p_relay, p.noise, p.gamma0, boost, p.formula);
  const double im = sinr_im(h_s1r, h_s2r, h_tr, p.p_source, p.p_relay, p.noise, anti);

  d.ic_feasible = ic.feasible;
  d.mode = (ic.feasible && ic.post_ic_snr >= im) ? InterferenceMode::CancelViaDecode
                                                  : InterferenceMode::Mitigate;

  if (!p.quantizer) {
    d.phi = phase_angle(d.mode == InterferenceMode::CancelViaDecode ? boost : anti);
    d.gamma_r = d.mode == InterferenceMode::CancelViaDecode ? ic.post_ic_snr : im;
    return d;
  }

  const cplx sent =
      quantize_phase(d.mode == InterferenceMode::CancelViaDecode ? boost : anti, *p.quantizer);
  d.phi = phase_angle(sent);
  const double as_noise = sinr_im(h_s1r, h_s2r, h_tr, p.p_source, p.p_relay, p.noise, sent);
  if (d.mode == InterferenceMode::CancelViaDecode) {
    const IcCheck realized = ic_check(h_s1r, h_s2r, h_tr, p.p_source, p.p_relay, p.noise,
                                      p.gamma0, sent, p.formula);
    d.gamma_r = realized.feasible ? realized.post_ic_snr : as_noise;
  } else {
    d.gamma_r = as_noise;
  }
  return d;
}

} // namespace relaysim
