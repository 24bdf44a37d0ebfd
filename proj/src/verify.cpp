#include "relaysim/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "relaysim/channel.hpp"
#include "relaysim/phase_align.hpp"
#include "relaysim/precoding.hpp"
#include "relaysim/rng.hpp"

namespace relaysim {

namespace {

constexpr std::array<int, 3> kAntennas{1, 2, 4};
constexpr std::array<double, 3> kSnrDb{0.0, 10.0, 20.0};
constexpr std::array<double, 3> kPowerRatio{0.5, 1.0, 2.0};
constexpr double kGridStep = 1e-4;

struct DrawOutcome {
  bool failed = false;
  double worst = 0.0;

  void check(double error, double tolerance) {
    const double r = error / tolerance;
    if (!(r <= 1.0)) failed = true;
    worst = std::max(worst, std::isnan(r) ? INFINITY : r);
  }
};

std::vector<cplx> draw_vector(int n, Rng &rng) {
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (auto &x : v) x = draw_coefficient(1.0, rng);
  return v;
}

template <class Kernel>
OracleReport run_suite(const char *name, long draws, std::uint64_t seed, bool parallel,
                       Kernel kernel) {
  OracleReport rep;
  rep.name = name;
  rep.draws = draws;
  long failures = 0;
  double worst = 0.0;
  if (parallel) {
#pragma omp parallel for schedule(static) reduction(+ : failures) reduction(max : worst)
    for (long i = 0; i < draws; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const DrawOutcome o = kernel(i, rng);
      failures += o.failed ? 1 : 0;
      worst = std::max(worst, o.worst);
    }
  } else {
    for (long i = 0; i < draws; ++i) {
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const DrawOutcome o = kernel(i, rng);
      failures += o.failed ? 1 : 0;
      worst = std::max(worst, o.worst);
    }
  }
  rep.failures = failures;
  rep.worst = worst;
  return rep;
}

DrawOutcome omega_draw(long i, Rng &rng) {
  const int nu = kAntennas[static_cast<std::size_t>(i % 3)];
  const double power = db_to_linear(kSnrDb[static_cast<std::size_t>((i / 3) % 3)]);
  const auto hs = draw_vector(nu, rng);
  const cplx htr = draw_coefficient(1.0, rng);
  const double a = gain(hs), b = std::norm(htr), rho = 1.0 / power;

  DrawOutcome out;
  const OmegaSolution w = optimal_omega(a, b, rho);
  const double grid_w = oracle_grid_omega(a, b, rho, kGridStep);
  if (!w.interference_free) out.check(std::abs(w.omega - grid_w), 5e-4);
  out.check(std::max(0.0, sinr_objective(a, b, rho, grid_w) - sinr_objective(a, b, rho, w.omega)),
            1e-8);

  const PrecoderSolution p = precoding_matrix(hs, htr, power, 1.0);
  double norm = 0.0;
  cplx shaped{};
  for (std::size_t k = 0; k < hs.size(); ++k) {
    norm += std::norm(p.m1[k]) + std::norm(p.m2[k]);
    shaped += hs[k] * p.m2[k];
  }
  out.check(std::abs(norm - 1.0), 1e-10);
  const cplx target = -p.omega * htr;
  out.check(std::abs(shaped - target) / std::max(std::abs(target), 1e-300), 1e-9);
  return out;
}

/// Discrete argmax of a unimodal function over indices [lo, hi].
template <class F>
long unimodal_argmax(long lo, long hi, F f) {
  while (hi - lo > 8) {
    const long m1 = lo + (hi - lo) / 3;
    const long m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2))
      lo = m1 + 1;
    else
      hi = m2;
  }
  long best = lo;
  for (long k = lo + 1; k <= hi; ++k)
    if (f(k) > f(best)) best = k;
  return best;
}

DrawOutcome joint_draw(long i, Rng &rng) {
  const int nu = kAntennas[static_cast<std::size_t>(i % 3)];
  const double p_relay = db_to_linear(kSnrDb[static_cast<std::size_t>((i / 3) % 3)]);
  const double p_max = kPowerRatio[static_cast<std::size_t>((i / 9) % 3)] * p_relay;
  const auto hs = draw_vector(nu, rng);
  const cplx htr = draw_coefficient(1.0, rng);
  const double a = gain(hs), b = std::norm(htr);

  DrawOutcome out;
  const JointPowerSolution sol = joint_power_omega(hs, htr, p_relay, p_max, 1.0);
  out.check(sol.p_s == p_max ? 0.0 : 1.0, 0.5);

  // Power rows P_max j / 1000; omega on the 1e-4 grid up to min(1, sqrt(a/b)).
  const double bound = b > 0.0 ? std::min(1.0, std::sqrt(a / b)) : 1.0;
  const long n_w = static_cast<long>(std::floor(bound / kGridStep));
  double grid_best = 0.0;
  long best_row = 0;
  for (long j = 1; j <= 1000; ++j) {
    const double ps = p_max * static_cast<double>(j) / 1000.0;
    auto h = [&](long k) {
      const double w = k > n_w ? bound : static_cast<double>(k) * kGridStep;
      return joint_sinr(a, b, w, ps, p_relay, 1.0);
    };
    const double v = h(unimodal_argmax(1, n_w + 1, h));
    if (v > grid_best) {
      grid_best = v;
      best_row = j;
    }
  }
  out.check(std::max(0.0, grid_best - sol.gamma_sr) / sol.gamma_sr, 1e-6);
  out.check(best_row == 1000 ? 0.0 : 1.0, 0.5);
  if (p_max == p_relay)
    out.check(std::abs(sol.omega - optimal_omega(a, b, 1.0 / p_relay).omega), 1e-9);
  return out;
}

DrawOutcome phase_draw(long, Rng &rng) {
  const cplx h2 = draw_coefficient(1.0, rng);
  const cplx htr = draw_coefficient(1.0, rng);
  const double s = std::abs(h2) / std::numbers::sqrt2;
  const double t = std::abs(htr);
  const double scale = s + t;

  DrawOutcome out;
  const double lo = residual_norm(h2, htr, phase_min(h2, htr).unit);
  const double hi = residual_norm(h2, htr, phase_max(h2, htr).unit);
  out.check(std::abs(lo - std::abs(t - s)) / scale, 1e-9);
  out.check(std::abs(hi - (t + s)) / scale, 1e-9);

  constexpr long kGrid = 1L << 16;
  const double step = 2.0 * std::numbers::pi / kGrid;
  double gmin = INFINITY, gmax = 0.0;
  for (long k = 0; k < kGrid; ++k) {
    const double r = residual_norm(h2, htr, std::polar(1.0, static_cast<double>(k) * step));
    gmin = std::min(gmin, r);
    gmax = std::max(gmax, r);
  }
  const double slack = s * step / 2.0 + 1e-12 * scale;
  out.check(std::max(0.0, lo - gmin) / scale, 1e-12);
  out.check(std::max(0.0, gmax - hi) / scale, 1e-12);
  out.check(std::max(0.0, gmin - lo), slack);
  out.check(std::max(0.0, hi - gmax), slack);
  return out;
}

} // namespace

OracleReport verify_omega(long draws, std::uint64_t seed, bool parallel) {
  return run_suite("omega", draws, seed, parallel, omega_draw);
}

OracleReport verify_joint_power(long draws, std::uint64_t seed, bool parallel) {
  return run_suite("joint_power", draws, seed, parallel, joint_draw);
}

OracleReport verify_phase(long draws, std::uint64_t seed, bool parallel) {
  return run_suite("phase", draws, seed, parallel, phase_draw);
}

OracleReport verify_spot() {
  OracleReport rep;
  rep.name = "spot";
  rep.draws = 1;
  DrawOutcome o;
  const double w = optimal_omega(1.0, 1.0, 1.0).omega;
  o.check(std::abs(w - (3.0 - std::sqrt(5.0)) / 2.0), 1e-9);
  o.check(std::abs(sinr_objective(1.0, 1.0, 1.0, w) - (std::sqrt(5.0) - 1.0) / 2.0), 1e-9);
  rep.failures = o.failed ? 1 : 0;
  rep.worst = o.worst;
  return rep;
}

std::vector<OracleReport> verify_all(long draws, std::uint64_t seed, bool parallel) {
  return {verify_omega(draws, seed, parallel), verify_joint_power(draws, seed, parallel),
          verify_phase(draws, seed, parallel), verify_spot()};
}

} // namespace relaysim
