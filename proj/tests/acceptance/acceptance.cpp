// Acceptance run: one PASS/FAIL line per criterion. Tolerances are pinned here.
//
// Sub-checks listed in kKnownRed are reproduced honestly and print FAIL, but do
// not fail the process; any other failing sub-check does. See README.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "relaysim/channel.hpp"
#include "relaysim/engine.hpp"
#include "relaysim/phase_align.hpp"
#include "relaysim/precoding.hpp"
#include "relaysim/rng.hpp"
#include "relaysim/sweep.hpp"

using namespace relaysim;

namespace {

const std::set<std::string> kKnownRed{"7d", "10b"};

constexpr long kOracleDraws = 10'000;
constexpr std::uint64_t kOracleSeed = 20240601;
constexpr long kMcSlots = 200'000;
constexpr long kSafetySlots = 1'000'000;
constexpr double kSigmas = 3.0;  // Monte Carlo slack for monotonicity checks

struct Check {
  std::string id;
  bool ok;
  std::string detail;
};

struct Criterion {
  int number;
  std::vector<Check> checks;
  double seconds = 0.0;
};

std::string fmt(const char *f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// ---- closed-form oracles, written independently of the library ----

double f_omega(double a, double b, double rho, double w) {
  return (a - b * w * w) / (b * (1 - w) * (1 - w) + rho);
}

double omega_bound(double a, double b) { return b > 0 ? std::min(1.0, std::sqrt(a / b)) : 1.0; }

struct GridBest {
  double w = 0;
  double f = -INFINITY;
};

GridBest grid_omega(double a, double b, double rho, double step) {
  GridBest g;
  const double hi = omega_bound(a, b);
  for (long k = 1;; ++k) {
    const double w = std::min(k * step, hi);
    const double v = f_omega(a, b, rho, w);
    if (v > g.f) g = {w, v};
    if (w >= hi) break;
  }
  return g;
}

template <class F>
double golden_max(double lo, double hi, F f) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1, x1 = x2, f1 = f2, x2 = lo + r * (hi - lo), f2 = f(x2);
    } else {
      hi = x2, x2 = x1, f2 = f1, x1 = hi - r * (hi - lo), f1 = f(x1);
    }
  }
  return std::max({f(lo), f(hi), f1, f2});
}

template <class F>
double discrete_max(long lo, long hi, F f) {
  while (hi - lo > 8) {
    const long m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (f(m1) < f(m2))
      lo = m1 + 1;
    else
      hi = m2;
  }
  double best = -INFINITY;
  for (long k = lo; k <= hi; ++k) best = std::max(best, f(k));
  return best;
}

double joint(double a, double b, double w, double ps, double pr) {
  const double r = std::sqrt(pr) - w * std::sqrt(ps);
  return (a - w * w * b) * ps / (b * r * r + 1.0);
}

std::vector<cplx> draw_vec(int n, Rng &rng) {
  std::vector<cplx> v(static_cast<std::size_t>(n));
  for (auto &x : v) x = draw_coefficient(1.0, rng);
  return v;
}

double norm2(const std::vector<cplx> &v) {
  double s = 0;
  for (const cplx &x : v) s += std::norm(x);
  return s;
}

const int kNu[3] = {1, 2, 4};
const double kSnr[3] = {0.0, 10.0, 20.0};

Criterion criteria_1_2(Criterion &c2) {
  Criterion c1{1, {}};
  c2.number = 2;
  long bad_w = 0, bad_f = 0, bad_norm = 0, bad_shape = 0;
  double worst_w = 0, worst_f = 0, worst_norm = 0, worst_shape = 0;
  for (long i = 0; i < kOracleDraws; ++i) {
    Rng rng(derive_seed(kOracleSeed, static_cast<std::uint64_t>(i)));
    const int nu = kNu[i % 3];
    const double p = db_to_linear(kSnr[(i / 3) % 3]);
    const auto hs = draw_vec(nu, rng);
    const cplx htr = draw_coefficient(1.0, rng);
    const double a = norm2(hs), b = std::norm(htr), rho = 1.0 / p;

    const double w = optimal_omega(a, b, rho).omega;
    const GridBest g = grid_omega(a, b, rho, 1e-4);
    const double dw = std::abs(w - g.w);
    const double df = g.f - f_omega(a, b, rho, w);
    worst_w = std::max(worst_w, dw);
    worst_f = std::max(worst_f, df);
    bad_w += dw > 5e-4;
    bad_f += df > 1e-8;

    const PrecoderSolution m = precoding_matrix(hs, htr, p, 1.0);
    cplx shaped{};
    double n = 0;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      n += std::norm(m.m1[k]) + std::norm(m.m2[k]);
      shaped += hs[k] * m.m2[k];
    }
    const double en = std::abs(n - 1.0);
    const double es = std::abs(shaped + m.omega * htr) / std::abs(m.omega * htr);
    worst_norm = std::max(worst_norm, en);
    worst_shape = std::max(worst_shape, es);
    bad_norm += en > 1e-10;
    bad_shape += es > 1e-9;
  }
  c1.checks.push_back({"1a", bad_w == 0, fmt("max |w - w_grid| = %.2e (tol 5e-4)", worst_w)});
  c1.checks.push_back({"1b", bad_f == 0, fmt("max f_grid - f(w) = %.2e (tol 1e-8)", worst_f)});
  c2.checks.push_back({"2a", bad_norm == 0, fmt("max |norm - 1| = %.2e (tol 1e-10)", worst_norm)});
  c2.checks.push_back(
      {"2b", bad_shape == 0, fmt("max shaping error = %.2e rel (tol 1e-9)", worst_shape)});
  return c1;
}

Criterion criterion_3() {
  Criterion c{3, {}};
  const double ratios[3] = {0.5, 1.0, 2.0};
  long bad_cont = 0, bad_grid = 0, bad_ps = 0, bad_row = 0, bad_reduce = 0;
  double worst_cont = 0, worst_grid = 0, worst_reduce = 0;
  for (long i = 0; i < kOracleDraws; ++i) {
    Rng rng(derive_seed(kOracleSeed + 3, static_cast<std::uint64_t>(i)));
    const int nu = kNu[i % 3];
    const double pr = db_to_linear(kSnr[(i / 3) % 3]);
    const double pmax = ratios[(i / 9) % 3] * pr;
    const auto hs = draw_vec(nu, rng);
    const cplx htr = draw_coefficient(1.0, rng);
    const double a = norm2(hs), b = std::norm(htr);
    const double hi = omega_bound(a, b);
    const long n_w = static_cast<long>(std::floor(hi / 1e-4));

    const JointPowerSolution s = joint_power_omega(hs, htr, pr, pmax, 1.0);
    bad_ps += s.p_s != pmax;

    double cont = -INFINITY, grid = -INFINITY;
    long cont_row = 0, grid_row = 0;
    for (long j = 1; j <= 1000; ++j) {
      const double ps = pmax * static_cast<double>(j) / 1000.0;
      const double vc = golden_max(0.0, hi, [&](double w) { return joint(a, b, w, ps, pr); });
      const double vg = discrete_max(1, n_w + 1, [&](long k) {
        return joint(a, b, k > n_w ? hi : k * 1e-4, ps, pr);
      });
      if (vc > cont) cont = vc, cont_row = j;
      if (vg > grid) grid = vg, grid_row = j;
    }
    const double ec = std::abs(s.gamma_sr - cont) / cont;
    const double eg = std::max(0.0, grid - s.gamma_sr) / grid;
    worst_cont = std::max(worst_cont, ec);
    worst_grid = std::max(worst_grid, eg);
    bad_cont += ec > 1e-6;
    bad_grid += eg > 1e-6;
    bad_row += cont_row != 1000 || grid_row != 1000;
    if (pmax == pr) {
      const double e = std::abs(s.omega - optimal_omega(a, b, 1.0 / pr).omega);
      worst_reduce = std::max(worst_reduce, e);
      bad_reduce += e > 1e-9;
    }
  }
  c.checks.push_back({"3a", bad_grid == 0,
                      fmt("closed form >= 2-D grid best, worst shortfall %.2e rel (tol 1e-6)",
                          worst_grid)});
  c.checks.push_back({"3b", bad_cont == 0,
                      fmt("vs continuous-omega power grid, worst %.2e rel (tol 1e-6)", worst_cont)});
  c.checks.push_back({"3c", bad_ps == 0 && bad_row == 0,
                      fmt("P_S* = P_max on %.0f/%.0f draws, grid argmax row 1000 on all but %.0f",
                          double(kOracleDraws - bad_ps), double(kOracleDraws), double(bad_row))});
  c.checks.push_back({"3d", bad_reduce == 0,
                      fmt("P_max = P_T reduces to single-power omega, worst %.2e (tol 1e-9)",
                          worst_reduce)});
  return c;
}

Criterion criterion_4() {
  Criterion c{4, {}};
  constexpr long kGrid = 1L << 16;
  std::vector<cplx> ph(kGrid);
  for (long k = 0; k < kGrid; ++k)
    ph[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / kGrid);
  long bad_exact = 0, bad_grid = 0;
  double worst_exact = 0, worst_grid = 0;
  for (long i = 0; i < kOracleDraws; ++i) {
    Rng rng(derive_seed(kOracleSeed + 4, static_cast<std::uint64_t>(i)));
    const cplx h2 = draw_coefficient(1.0, rng);
    const cplx htr = draw_coefficient(1.0, rng);
    const double s = std::abs(h2) / std::numbers::sqrt2, t = std::abs(htr), scale = s + t;
    auto res = [&](cplx e) { return std::abs(h2 * e / std::numbers::sqrt2 + htr); };
    const double lo = res(phase_min(h2, htr).unit), hi = res(phase_max(h2, htr).unit);
    const double e1 = std::max(std::abs(lo - std::abs(t - s)), std::abs(hi - (t + s))) / scale;
    worst_exact = std::max(worst_exact, e1);
    bad_exact += e1 > 1e-9;
    double gmin = INFINITY, gmax = 0;
    for (const cplx &e : ph) {
      const double r = res(e);
      gmin = std::min(gmin, r);
      gmax = std::max(gmax, r);
    }
    const double e2 = std::max(lo - gmin, gmax - hi) / scale;
    worst_grid = std::max(worst_grid, e2);
    bad_grid += e2 > 1e-12;
  }
  c.checks.push_back({"4a", bad_exact == 0,
                      fmt("analytic extremes, worst %.2e rel (tol 1e-9)", worst_exact)});
  c.checks.push_back({"4b", bad_grid == 0,
                      fmt("2^16 phase grid never beats phi*/phi-dagger, worst %.2e", worst_grid)});
  return c;
}

Criterion criterion_5() {
  Criterion c{5, {}};
  // Grid oracle first, then the frozen constants.
  const GridBest g = grid_omega(1, 1, 1, 1e-6);
  const double w_exact = (3 - std::sqrt(5.0)) / 2, g_exact = (std::sqrt(5.0) - 1) / 2;
  c.checks.push_back({"5a", std::abs(g.w - w_exact) < 2e-6 && std::abs(g.f - g_exact) < 1e-9,
                      fmt("grid oracle w = %.7f, f = %.10f", g.w, g.f)});
  const double w = optimal_omega(1, 1, 1).omega;
  const double gamma = precoded_sinr(1, 1, 1, 1);
  c.checks.push_back({"5b", std::abs(w - 0.38196601125010515) < 1e-9 &&
                                std::abs(gamma - 0.61803398874989485) < 1e-9,
                      fmt("w = %.15f, gamma = %.15f", w, gamma)});
  return c;
}

// ---- Monte Carlo helpers ----

SimConfig mc(Policy p, BufferMode mode, int K, double snr, double rr_db = 0.0) {
  SimConfig c;
  c.net = NetworkConfig::from_db(K, 2, snr, 0.0, rr_db, 0.0);
  c.policy = p;
  c.mode = mode;
  c.slots = kMcSlots;
  c.seed = 1;
  c.snr_db = snr;
  c.sigma_rr_db = rr_db;
  return c;
}

double outage_se(const SimResult &r) {
  const double n = static_cast<double>(std::max(1L, r.attempts()));
  const double p = std::max(*r.outage_prob, 1.0 / n);
  return std::max(r.outage_stderr, std::sqrt(p * (1 - p) / n));
}

Criterion criterion_6() {
  Criterion c{6, {}};
  std::vector<SimConfig> cfgs;
  for (Policy p : {Policy::BaSprs, Policy::UpperBound, Policy::SfdMmrsIdeal,
                   Policy::SfdMmrsNonIdeal, Policy::HdBrs, Policy::HdHrs, Policy::HdMlrs,
                   Policy::BaPars, Policy::BaSor})
    for (BufferMode m : {BufferMode::Adaptive, BufferMode::Fixed}) {
      if (!supports(p, m)) continue;
      SimConfig s = mc(p, m, 3, 15.0);
      s.slots = kSafetySlots;
      s.q_max = 10;
      s.check_invariants = true;
      cfgs.push_back(s);
    }
  long violations = 0;
  for (const SimResult &r : run_all(cfgs)) violations += r.invariant_violations;
  c.checks.push_back({"6", violations == 0,
                      fmt("%.0f runs x 1e6 slots, %.0f invariant or flow violations",
                          double(cfgs.size()), double(violations))});
  return c;
}

Criterion criterion_7() {
  Criterion c{7, {}};
  const Policy ps[] = {Policy::UpperBound, Policy::BaSprs, Policy::SfdMmrsIdeal,
                       Policy::SfdMmrsNonIdeal, Policy::HdBrs, Policy::HdHrs, Policy::HdMlrs};
  std::vector<SimConfig> cfgs;
  for (Policy p : ps) cfgs.push_back(mc(p, BufferMode::Adaptive, 2, 20.0));
  cfgs.push_back(mc(Policy::UpperBound, BufferMode::Adaptive, 2, 20.0, -3.0));
  cfgs.push_back(mc(Policy::BaSprs, BufferMode::Adaptive, 2, 20.0, -3.0));
  const auto r = run_all(cfgs);
  const double ub = r[0].avg_rate_bpcu, sprs = r[1].avg_rate_bpcu, ideal = r[2].avg_rate_bpcu,
               real = r[3].avg_rate_bpcu;
  const double hd[3] = {r[4].avg_rate_bpcu, r[5].avg_rate_bpcu, r[6].avg_rate_bpcu};
  c.checks.push_back({"7a", std::abs(ideal - ub) / ub <= 0.02,
                      fmt("ideal SFD-MMRS %.4f vs upper bound %.4f", ideal, ub)});
  const bool b = sprs >= real && sprs >= *std::max_element(hd, hd + 3);
  c.checks.push_back({"7b", b, fmt("BA-SPRS %.4f, non-ideal SFD %.4f, best HD %.4f", sprs, real,
                                   *std::max_element(hd, hd + 3))});
  const double ub3 = r[7].avg_rate_bpcu, sprs3 = r[8].avg_rate_bpcu;
  c.checks.push_back({"7c", (ub3 - sprs3) / ub3 <= 0.05,
                      fmt("-3 dB IRI: BA-SPRS %.4f vs upper bound %.4f (gap %.2f%%)", sprs3, ub3,
                          100 * (ub3 - sprs3) / ub3)});
  bool d = true;
  for (double x : hd) d = d && x / ideal >= 0.40 && x / ideal <= 0.60;
  c.checks.push_back({"7d", d,
                      fmt("HD / ideal SFD: BRS %.3f, HRS %.3f, MLRS %.3f (band [0.40, 0.60])",
                          hd[0] / ideal, hd[1] / ideal, hd[2] / ideal)});
  return c;
}

Criterion criterion_8() {
  Criterion c{8, {}};
  std::vector<SimConfig> cfgs;
  for (int K = 2; K <= 6; ++K)
    for (Policy p : {Policy::UpperBound, Policy::BaSprs, Policy::HdMlrs})
      cfgs.push_back(mc(p, BufferMode::Adaptive, K, 20.0));
  const auto r = run_all(cfgs);
  auto at = [&](int K, int j) -> const SimResult & { return r[(K - 2) * 3 + j]; };
  const double g3 = (at(3, 0).avg_rate_bpcu - at(3, 1).avg_rate_bpcu) / at(3, 0).avg_rate_bpcu;
  c.checks.push_back({"8a", g3 <= 0.03, fmt("K=3 gap to upper bound %.2f%% (tol 3%%)", 100 * g3)});
  bool gap_ok = true, mlrs_ok = true;
  std::string gaps, mlrs;
  for (int K = 2; K <= 6; ++K) {
    const double g = at(K, 0).avg_rate_bpcu - at(K, 1).avg_rate_bpcu;
    gaps += fmt(K == 2 ? "%.3f" : " %.3f", g);
    mlrs += fmt(K == 2 ? "%.3f" : " %.3f", at(K, 2).avg_rate_bpcu);
    if (K == 2) continue;
    const double gp = at(K - 1, 0).avg_rate_bpcu - at(K - 1, 1).avg_rate_bpcu;
    double v = 0;
    for (int k : {K - 1, K})
      for (int j : {0, 1}) v += at(k, j).rate_stderr * at(k, j).rate_stderr;
    gap_ok = gap_ok && g <= gp + kSigmas * std::sqrt(v);
    const double sm = std::hypot(at(K, 2).rate_stderr, at(K - 1, 2).rate_stderr);
    mlrs_ok = mlrs_ok && at(K, 2).avg_rate_bpcu <= at(K - 1, 2).avg_rate_bpcu + kSigmas * sm;
  }
  c.checks.push_back({"8b", gap_ok, "upper bound - BA-SPRS for K=2..6: " + gaps});
  c.checks.push_back({"8c", mlrs_ok, "HD-MLRS rate for K=2..6: " + mlrs});
  return c;
}

double log_interp(double x0, double y0, double x1, double y1, double x) {
  const double t = (x - x0) / (x1 - x0);
  return std::pow(10.0, std::log10(y0) + t * (std::log10(y1) - std::log10(y0)));
}

Criterion criterion_9() {
  Criterion c{9, {}};
  struct V {
    Policy p;
    double factor;
    const char *name;
  };
  const V vs[] = {{Policy::BaPars, 1, "ba_pars"},          {Policy::BaPars, 2, "ba_pars_2p"},
                  {Policy::BaSor, 1, "ba_sor"},            {Policy::SfdMmrsIdeal, 1, "sfd_ideal"},
                  {Policy::SfdMmrsNonIdeal, 1, "sfd_nonideal"}, {Policy::HdBrs, 1, "hd_brs"},
                  {Policy::HdHrs, 1, "hd_hrs"},            {Policy::HdMlrs, 1, "hd_mlrs"}};
  const std::vector<double> snr{0, 5, 10, 15, 20, 25, 30, 35, 40};
  std::vector<SimConfig> cfgs;
  for (const V &v : vs)
    for (double s : snr) {
      SimConfig x = mc(v.p, BufferMode::Fixed, 3, s);
      x.policy_cfg.source_power_factor = v.factor;
      cfgs.push_back(x);
    }
  const std::vector<double> fine{2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (int j : {1, 3})
    for (double s : fine) {
      SimConfig x = mc(vs[j].p, BufferMode::Fixed, 3, s);
      x.policy_cfg.source_power_factor = vs[j].factor;
      cfgs.push_back(x);
    }
  const auto r = run_all(cfgs);
  const std::size_t ns = snr.size();

  bool mono = true;
  std::string worst = "none";
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t i = 1; i < ns; ++i) {
      const SimResult &a = r[v * ns + i - 1], &b = r[v * ns + i];
      const double tol = kSigmas * std::hypot(outage_se(a), outage_se(b));
      if (*b.outage_prob > *a.outage_prob + tol) {
        mono = false;
        worst = std::string(vs[v].name) + fmt(" at %.0f dB", snr[i]);
      }
    }
  c.checks.push_back({"9a", mono, "outage non-increasing over 0..40 dB for all 8 schemes; "
                                  "first violation: " + worst});

  const std::size_t off = 8 * ns;
  auto fine_out = [&](int which, std::size_t i) { return *r[off + which * fine.size() + i].outage_prob; };
  double x_star = NAN, p2 = NAN;
  for (std::size_t i = 1; i < fine.size(); ++i) {
    const double y0 = fine_out(1, i - 1), y1 = fine_out(1, i);
    if (y0 >= 1e-2 && y1 < 1e-2) {
      const double t = (std::log10(1e-2) - std::log10(y0)) / (std::log10(y1) - std::log10(y0));
      x_star = fine[i - 1] + t * (fine[i] - fine[i - 1]);
      p2 = log_interp(fine[i - 1], fine_out(0, i - 1), fine[i], fine_out(0, i), x_star);
      break;
    }
  }
  const double dec = std::abs(std::log10(p2) - std::log10(1e-2));
  c.checks.push_back({"9b", std::isfinite(dec) && dec <= 0.3,
                      fmt("ideal SFD outage hits 1e-2 at %.2f dB; BA-PARS[2P] there %.3g "
                          "(%.2f decades, tol 0.3)",
                          x_star, p2, dec)});

  bool flat = true;
  for (std::size_t i = 4; i < ns; ++i) {
    const SimResult &a = r[i - 1], &b = r[i];
    flat = flat && *b.outage_prob <=
                       *a.outage_prob + kSigmas * std::hypot(outage_se(a), outage_se(b));
  }
  c.checks.push_back({"9c", flat,
                      fmt("BA-PARS outage 20/30/40 dB: %.2e %.2e %.2e (BA-SOR 40 dB: %.2e)",
                          *r[4].outage_prob, *r[6].outage_prob, *r[8].outage_prob,
                          *r[2 * ns + 8].outage_prob)});
  return c;
}

Criterion criterion_10() {
  Criterion c{10, {}};
  std::vector<SimConfig> cfgs;
  for (double c0 : {1.5, 2.5})
    for (Policy p : {Policy::BaPars, Policy::SfdMmrsNonIdeal, Policy::HdBrs, Policy::HdHrs,
                     Policy::HdMlrs}) {
      SimConfig x = mc(p, BufferMode::Fixed, 3, 30.0);
      x.q_max = 10;
      x.policy_cfg.c0 = c0;
      cfgs.push_back(x);
    }
  const auto r = run_all(cfgs);
  const double p15 = r[0].avg_rate_bpcu, p25 = r[5].avg_rate_bpcu;
  c.checks.push_back({"10a", p15 >= 0.95 * 1.5 && p25 >= 0.95 * 2.5,
                      fmt("BA-PARS at 30 dB: %.3f / 1.5, %.3f / 2.5 (need >= 0.95 C0)", p15, p25)});
  const double sfd = r[6].avg_rate_bpcu;
  const double hd = std::max({r[7].avg_rate_bpcu, r[8].avg_rate_bpcu, r[9].avg_rate_bpcu});
  c.checks.push_back({"10b", sfd < hd,
                      fmt("C0=2.5, 30 dB: non-ideal SFD-MMRS %.3f vs best HD %.3f", sfd, hd)});
  return c;
}

Criterion criterion_11() {
  Criterion c{11, {}};
  const std::vector<double> qs{5, 10, 25, 50, 200, kInfiniteCapacity};
  std::vector<SimConfig> cfgs;
  for (Policy p : {Policy::BaSprs, Policy::SfdMmrsIdeal})
    for (double q : qs) {
      SimConfig x = mc(p, BufferMode::Adaptive, 3, 20.0);
      x.q_max = q;
      cfgs.push_back(x);
    }
  const auto r = run_all(cfgs);
  const char *names[2] = {"BA-SPRS", "ideal SFD-MMRS"};
  for (int s = 0; s < 2; ++s) {
    const SimResult *row = &r[s * qs.size()];
    bool mono = true;
    std::string rates;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      rates += fmt(i ? " %.3f" : "%.3f", row[i].avg_rate_bpcu);
      if (i > 0 && i + 1 < qs.size())
        mono = mono && row[i].avg_rate_bpcu >=
                           row[i - 1].avg_rate_bpcu -
                               kSigmas * std::hypot(row[i].rate_stderr, row[i - 1].rate_stderr);
    }
    const double inf = row[qs.size() - 1].avg_rate_bpcu;
    const double gap = std::abs(row[4].avg_rate_bpcu - inf) / inf;
    c.checks.push_back({s ? "11b" : "11a", mono && gap <= 0.02,
                        std::string(names[s]) + " q=5..200,inf: " + rates +
                            fmt(" (q=200 gap %.2f%%, tol 2%%)", 100 * gap)});
  }
  return c;
}

template <class F>
Criterion timed(F f) {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c = f();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

} // namespace

int main() {
  std::vector<Criterion> all;
  Criterion c2;
  all.push_back(timed([&] { return criteria_1_2(c2); }));
  all.push_back(c2);
  all.push_back(timed(criterion_3));
  all.push_back(timed(criterion_4));
  all.push_back(timed(criterion_5));
  all.push_back(timed(criterion_6));
  all.push_back(timed(criterion_7));
  all.push_back(timed(criterion_8));
  all.push_back(timed(criterion_9));
  all.push_back(timed(criterion_10));
  all.push_back(timed(criterion_11));

  bool unexpected = false;
  for (const Criterion &c : all) {
    bool ok = true;
    for (const Check &k : c.checks) ok = ok && k.ok;
    std::printf("criterion %2d: %s (%.1f s)\n", c.number, ok ? "PASS" : "FAIL", c.seconds);
    for (const Check &k : c.checks) {
      const bool known = kKnownRed.count(k.id) > 0;
      std::printf("    %-4s %s  %s%s\n", k.id.c_str(), k.ok ? "ok  " : "FAIL", k.detail.c_str(),
                  !k.ok && known ? "  [known red]" : "");
      unexpected = unexpected || (!k.ok && !known);
    }
  }
  std::fflush(stdout);
  return unexpected ? 1 : 0;
}
