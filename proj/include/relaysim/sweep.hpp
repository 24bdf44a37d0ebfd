#pragma once

#include <string>
#include <vector>

#include "relaysim/engine.hpp"

namespace relaysim {

/// One curve of a sweep: a policy plus the knobs that distinguish variants
/// such as the double-source-power phase-aligned scheme.
struct PolicyVariant {
  Policy policy = Policy::BaSprs;
  double source_power_factor = 1.0;
  std::string label;  // empty: policy name

  bool operator==(const PolicyVariant &) const = default;
};

/// Cartesian product of axes. Row order: sigma_rr, K, q_max, c0, snr, then
/// policy innermost.
struct SweepSpec {
  SimConfig base;  // net.power and var_rr are overwritten per row
  double sigma_sr_db = 0.0;
  double sigma_rd_db = 0.0;
  std::vector<double> snr_db{20.0};
  std::vector<double> sigma_rr_db{0.0};
  std::vector<int> relays{2};
  std::vector<double> q_max{kInfiniteCapacity};
  std::vector<double> c0{1.0};
  std::vector<PolicyVariant> policies;
};

/// Per-run configurations in row order. With base.paired_channels every run
/// uses base.seed; otherwise run i uses base.seed + i.
std::vector<SimConfig> expand_sweep(const SweepSpec &spec);

/// Runs every configuration on up to `jobs` threads (0: OpenMP default).
/// Output order matches the input.
std::vector<SimResult> run_all(const std::vector<SimConfig> &configs, int jobs = 0);
/// Single-threaded reference for run_all.
std::vector<SimResult> run_all_serial(const std::vector<SimConfig> &configs);

std::vector<SimResult> sweep(const SweepSpec &spec, int jobs = 0);
std::vector<SimResult> sweep_serial(const SweepSpec &spec);

} // namespace relaysim
