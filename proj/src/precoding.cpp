#include "relaysim/precoding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace relaysim {

namespace {

constexpr double kOmegaFloor = 1e-15;
constexpr double kInterferenceFreeRatio = 1e-12;

double omega_upper_bound(double a, double b) noexcept {
  return b > 0.0 ? std::min(1.0, std::sqrt(a / b)) : 1.0;
}

double residual_denominator(double b, double omega, double power, double noise,
                            SinrDenominator denom) noexcept {
  const double factor = denom == SinrDenominator::ResidualAmplitude
                            ? (1.0 - omega) * (1.0 - omega)
                            : (1.0 - omega * omega);
  return factor * b * power + noise;
}

} // namespace

OmegaSolution optimal_omega(double a, double b, double rho) {
  if (!(a > 0.0) || !(rho > 0.0) || !(b >= 0.0))
    throw std::invalid_argument("optimal_omega: requires a > 0, b >= 0, rho > 0");

  OmegaSolution sol;
  if (b < kInterferenceFreeRatio * a) {
    sol.omega = a / (a + b + rho);
    sol.interference_free = true;
    return sol;
  }
  const double s = a + b + rho;
  const double disc = (a - b) * (a - b) + rho * rho + 2.0 * rho * (a + b);
  const double w = 2.0 * a / (s + std::sqrt(disc));
  sol.omega = std::clamp(w, kOmegaFloor, omega_upper_bound(a, b));
  return sol;
}

double sinr_objective(double a, double b, double rho, double omega) noexcept {
  return (a - b * omega * omega) / (b * (1.0 - omega) * (1.0 - omega) + rho);
}

double sinr_objective_derivative(double a, double b, double rho, double omega) noexcept {
  const double d = b * (1.0 - omega) * (1.0 - omega) + rho;
  return 2.0 * b * (b * omega * omega - (a + b + rho) * omega + a) / (d * d);
}

double precoded_sinr(double a, double b, double power, double noise,
                     SinrDenominator denom) noexcept {
  if (!(a > 0.0)) return 0.0;
  const double rho = noise / power;
  double omega;
  if (b < kInterferenceFreeRatio * a) {
    omega = a / (a + b + rho);
  } else {
    const double s = a + b + rho;
    const double disc = (a - b) * (a - b) + rho * rho + 2.0 * rho * (a + b);
    omega = std::clamp(2.0 * a / (s + std::sqrt(disc)), kOmegaFloor, omega_upper_bound(a, b));
  }
  const double beta2 = std::max(0.0, a - omega * omega * b);
  return beta2 * power / residual_denominator(b, omega, power, noise, denom);
}

PrecoderSolution precoding_matrix(std::span<const cplx> hs, cplx htr, double power,
                                  double noise, SinrDenominator denom) {
  const double a = gain(hs);
  if (!(a > 0.0)) throw DeadSourceLink();
  const double b = std::norm(htr);

  const OmegaSolution w = optimal_omega(a, b, noise / power);
  PrecoderSolution sol;
  sol.omega = w.omega;
  sol.interference_free = w.interference_free;
  sol.beta = std::sqrt(std::max(0.0, a - w.omega * w.omega * b));

  const double c1 = sol.beta / a;
  const cplx c2 = -w.omega * htr / a;
  sol.m1.resize(hs.size());
  sol.m2.resize(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sol.m1[i] = c1 * std::conj(hs[i]);
    sol.m2[i] = c2 * std::conj(hs[i]);
  }
  sol.gamma_sr = sol.beta * sol.beta * power /
                 residual_denominator(b, w.omega, power, noise, denom);
  return sol;
}

double effective_sinr_sr(std::span<const cplx> hs, cplx htr, double power, double noise,
                         SinrDenominator denom) {
  const double a = gain(hs);
  if (!(a > 0.0)) throw DeadSourceLink();
  return precoded_sinr(a, std::norm(htr), power, noise, denom);
}

double joint_sinr(double a, double b, double omega, double p_s, double p_relay,
                  double noise) noexcept {
  const double r = std::sqrt(p_relay) - omega * std::sqrt(p_s);
  return (a - omega * omega * b) * p_s / (b * r * r + noise);
}

JointPowerSolution joint_power_omega(std::span<const cplx> hs, cplx htr, double p_relay,
                                     double p_max, double noise) {
  if (!(p_relay > 0.0) || !(p_max > 0.0) || !(noise > 0.0))
    throw std::invalid_argument("joint_power_omega: powers and noise must be positive");
  const double a = gain(hs);
  if (!(a > 0.0)) throw DeadSourceLink();
  const double b = std::norm(htr);

  JointPowerSolution sol;
  sol.p_s = p_max;
  if (b == 0.0) {
    sol.omega = 1.0;
    sol.omega_power = std::numeric_limits<double>::infinity();
    sol.omega_stationary = 1.0;
    sol.gamma_sr = a * p_max / noise;
    return sol;
  }

  const double c = std::sqrt(p_relay);
  const double m = std::sqrt(p_max);
  sol.omega_power = (p_relay * b + noise) / (c * m * b);

  // Smaller root of c m b w^2 - (p_max a + p_relay b + noise) w + c m a = 0.
  const double s = p_max * a + p_relay * b + noise;
  const double u = p_max * a - p_relay * b;
  const double disc = u * u + noise * noise + 2.0 * noise * (p_max * a + p_relay * b);
  sol.omega_stationary = 2.0 * c * m * a / (s + std::sqrt(disc));

  const double w = std::min({1.0, std::sqrt(a / b), sol.omega_power, sol.omega_stationary});
  sol.omega = std::max(w, kOmegaFloor);
  sol.gamma_sr = joint_sinr(a, b, sol.omega, p_max, p_relay, noise);
  return sol;
}

double oracle_grid_omega(double a, double b, double rho, double resolution) {
  if (!(resolution > 0.0) || resolution > 1e-4)
    throw std::invalid_argument("oracle_grid_omega: resolution must be in (0, 1e-4]");
  const double bound = omega_upper_bound(a, b);
  double best_w = std::min(resolution, bound);
  double best_f = sinr_objective(a, b, rho, best_w);
  for (long i = 2;; ++i) {
    const double w = static_cast<double>(i) * resolution;
    if (w > bound) break;
    const double f = sinr_objective(a, b, rho, w);
    if (f > best_f) {
      best_f = f;
      best_w = w;
    }
  }
  if (const double f = sinr_objective(a, b, rho, bound); f > best_f) best_w = bound;
  return best_w;
}

} // namespace relaysim
