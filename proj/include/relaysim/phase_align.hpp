#pragma once

#include <optional>

#include "relaysim/channel.hpp"

namespace relaysim {

/// Unit phasor fed back by the receiving relay.
struct PhaseSolution {
  cplx unit{1.0, 0.0};
  /// One of the channels is zero and the phase carries no information.
  bool degenerate = false;
};

/// Phase minimizing |h_s2r e^{j phi} / sqrt(2) + h_tr|: puts the second
/// antenna's copy of the interferer's packet in anti-phase with the IRI.
/// Achieved minimum is | |h_tr| - |h_s2r| / sqrt(2) |.
PhaseSolution phase_min(cplx h_s2r, cplx h_tr) noexcept;

/// Phase maximizing the same norm (co-phased); achieved maximum is
/// |h_tr| + |h_s2r| / sqrt(2). Always the negative of phase_min's phasor.
PhaseSolution phase_max(cplx h_s2r, cplx h_tr) noexcept;

/// Uniform phase codebook {2 pi k / 2^bits}.
struct QuantizerConfig {
  int bits = 8;
  bool operator==(const QuantizerConfig &) const = default;
};

/// Nearest codebook phasor; exact ties go to the smaller phase.
cplx quantize_phase(cplx unit, QuantizerConfig q);

/// Phase angle of a unit phasor in [0, 2 pi).
double phase_angle(cplx unit) noexcept;

/// Norm of the residual interference amplitude h_s2r e / sqrt(2) + h_tr.
double residual_norm(cplx h_s2r, cplx h_tr, cplx unit) noexcept;

/// S->R SINR with interference mitigation, common power P:
/// |h_s1r|^2 (P/2) / (|h_s2r e / sqrt(2) + h_tr|^2 P + noise).
double sinr_im(cplx h_s1r, cplx h_s2r, cplx h_tr, double power, double noise,
               cplx unit) noexcept;

/// Same with distinct source and relay powers. Each source antenna radiates
/// p_source / 2. An empty `unit` means the second antenna is silent (used
/// when there is no interferer to shape).
double sinr_im(cplx h_s1r, cplx h_s2r, cplx h_tr, double p_source, double p_relay,
               double noise, std::optional<cplx> unit) noexcept;

/// Which expression decides whether the IRI can be decoded first.
enum class IcFormula {
  SignalModel,  // boosted IRI |sqrt(P_T) h_tr + sqrt(P_S/2) h_s2r e|^2 over own data + noise
  AsPrinted,    // |h_tr|^2 P_T / (|h_s1r + h_s2r e|^2 P_S/2 + noise)
};

struct IcCheck {
  bool feasible = false;
  double gamma_ic = 0.0;     // SINR of the interferer's packet at the receiving relay
  double post_ic_snr = 0.0;  // |h_s1r|^2 (P_S/2) / noise
};

/// IC feasibility with the amplifying phase and common power P.
IcCheck ic_check(cplx h_s1r, cplx h_s2r, cplx h_tr, double power, double noise,
                 double gamma0, IcFormula formula = IcFormula::SignalModel);

/// IC feasibility for a given phasor and distinct powers.
IcCheck ic_check(cplx h_s1r, cplx h_s2r, cplx h_tr, double p_source, double p_relay,
                 double noise, double gamma0, cplx unit,
                 IcFormula formula = IcFormula::SignalModel);

/// |h_td|^2 P / noise.
double snr_rd(cplx h_td, double power, double noise) noexcept;

enum class InterferenceMode { Mitigate, CancelViaDecode };

struct PhaseDecision {
  double phi = 0.0;  // realized (possibly quantized) phase in [0, 2 pi)
  InterferenceMode mode = InterferenceMode::Mitigate;
  double gamma_r = 0.0;
  bool ic_feasible = false;
};

struct PhaseAlignParams {
  double p_source = 1.0;
  double p_relay = 1.0;
  double noise = 1.0;
  double gamma0 = 1.0;
  IcFormula formula = IcFormula::SignalModel;
  std::optional<QuantizerConfig> quantizer;  // empty: ideal phase feedback
};

/// Receiver-side choice between cancelling and mitigating the IRI.
///
/// Cancellation is chosen when it is feasible with the ideal amplifying phase
/// and its post-IC SNR is at least the mitigation SINR with the ideal
/// anti-phase; otherwise mitigation. The chosen phase is then quantized (if
/// configured) and gamma_r is the SINR realized with that phase. If the
/// quantized phase no longer lets the IRI be decoded, the IRI is treated as
/// noise at that phase.
PhaseDecision decide_phase(cplx h_s1r, cplx h_s2r, cplx h_tr, const PhaseAlignParams &p);

} // namespace relaysim
