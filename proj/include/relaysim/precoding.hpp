#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "relaysim/channel.hpp"

namespace relaysim {

/// Residual-interference term used when evaluating the precoded S->R SINR.
enum class SinrDenominator {
  ResidualAmplitude,  // (1 - w)^2 |h_TR|^2 P, residual amplitude (1 - w) h_TR
  OneMinusOmegaSq,    // (1 - w^2) |h_TR|^2 P, kept for sensitivity studies
};

/// Raised when the source has no channel to the receiving relay.
class DeadSourceLink : public std::domain_error {
public:
  DeadSourceLink() : std::domain_error("dead source link: |h_S| = 0") {}
};

struct OmegaSolution {
  double omega = 1.0;
  /// |h_TR|^2 negligible next to |h_S|^2; m2 vanishes and omega is immaterial.
  bool interference_free = false;
};

/// Interference-suppression fraction maximizing the S->R SINR.
///
/// With a = |h_S|^2, b = |h_TR|^2 and rho = noise / P, the SINR as a function
/// of omega is f(w) = (a - b w^2) / (b (1 - w)^2 + rho). Its maximizer is the
/// smaller root of b w^2 - (a + b + rho) w + a = 0, evaluated here in the
/// cancellation-free form 2a / ((a + b + rho) + sqrt(D)) with
/// D = (a - b)^2 + rho^2 + 2 rho (a + b). The result is clamped into
/// [1e-15, min(1, sqrt(a / b))].
///
/// Requires a > 0 and rho > 0; throws std::invalid_argument otherwise.
OmegaSolution optimal_omega(double a, double b, double rho);

/// f(w) above.
double sinr_objective(double a, double b, double rho, double omega) noexcept;

/// df/dw = 2b (b w^2 - (a + b + rho) w + a) / (b (1 - w)^2 + rho)^2.
double sinr_objective_derivative(double a, double b, double rho, double omega) noexcept;

/// Two-column source precoder M = [m1 m2] for one receiving relay.
struct PrecoderSolution {
  std::vector<cplx> m1;  // data beam
  std::vector<cplx> m2;  // interference-shaping beam
  double omega = 1.0;
  double beta = 0.0;     // effective data amplitude h_S^H m1 (real, >= 0)
  double gamma_sr = 0.0; // resulting S->R SINR, linear
  bool interference_free = false;
};

/// Closed-form SINR-maximizing precoder.
///
/// `hs` holds the coefficients from each source antenna to the receiving
/// relay; the effective scalar channel of a beam m is sum_i hs[i] * m[i], so
/// both beams are built along conj(hs):
///   m1 = sqrt(a - w^2 b) / a * conj(hs),   m2 = -w h_TR / a * conj(hs).
/// Throws DeadSourceLink when |hs| = 0.
PrecoderSolution precoding_matrix(std::span<const cplx> hs, cplx htr, double power,
                                  double noise,
                                  SinrDenominator denom = SinrDenominator::ResidualAmplitude);

/// SINR at the receiving relay under the closed-form precoder.
/// Throws DeadSourceLink when |hs| = 0.
double effective_sinr_sr(std::span<const cplx> hs, cplx htr, double power, double noise,
                         SinrDenominator denom = SinrDenominator::ResidualAmplitude);

/// Same quantity from the scalar gains a = |hs|^2 and b = |h_TR|^2; returns 0
/// for a dead source link instead of throwing. Used in the per-slot hot loop.
double precoded_sinr(double a, double b, double power, double noise,
                     SinrDenominator denom = SinrDenominator::ResidualAmplitude) noexcept;

/// Joint source-power and omega optimum when the source may use up to p_max
/// while the transmitting relay uses p_relay.
struct JointPowerSolution {
  double p_s = 0.0;
  double omega = 1.0;
  double gamma_sr = 0.0;
  double omega_power = 0.0;      // (p_relay b + noise) / (sqrt(p_relay p_max) b)
  double omega_stationary = 0.0; // smaller stationary root at p_s = p_max
};

/// SINR with precoder parameter omega and source power p_s:
/// (a - w^2 b) p_s / (b (sqrt(p_relay) - w sqrt(p_s))^2 + noise).
double joint_sinr(double a, double b, double omega, double p_s, double p_relay,
                  double noise) noexcept;

/// Throws DeadSourceLink for |hs| = 0 and std::invalid_argument for
/// non-positive powers or noise.
JointPowerSolution joint_power_omega(std::span<const cplx> hs, cplx htr, double p_relay,
                                     double p_max, double noise);

/// Grid argmax of f(w) over {res, 2 res, ..., min(1, sqrt(a/b))}.
/// Verification oracle; requires resolution <= 1e-4.
double oracle_grid_omega(double a, double b, double rho, double resolution);

} // namespace relaysim
