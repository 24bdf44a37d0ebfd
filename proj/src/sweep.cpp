#include "relaysim/sweep.hpp"

#include <exception>
#include <stdexcept>

#include <omp.h>

namespace relaysim {

std::vector<SimConfig> expand_sweep(const SweepSpec &spec) {
  if (spec.policies.empty()) throw std::invalid_argument("sweep needs at least one policy");
  std::vector<SimConfig> out;
  for (double rr : spec.sigma_rr_db)
    for (int K : spec.relays)
      for (double q : spec.q_max)
        for (double c0 : spec.c0)
          for (double snr : spec.snr_db)
            for (const PolicyVariant &v : spec.policies) {
              SimConfig c = spec.base;
              c.net = NetworkConfig::from_db(K, spec.base.net.num_antennas, snr,
                                             spec.sigma_sr_db, rr, spec.sigma_rd_db);
              c.snr_db = snr;
              c.sigma_rr_db = rr;
              c.q_max = q;
              c.policy = v.policy;
              c.policy_cfg.c0 = c0;
              c.policy_cfg.source_power_factor = v.source_power_factor;
              c.label = v.label;
              if (!spec.base.paired_channels) c.seed = spec.base.seed + out.size();
              out.push_back(std::move(c));
            }
  return out;
}

std::vector<SimResult> run_all(const std::vector<SimConfig> &configs, int jobs) {
  std::vector<SimResult> results(configs.size());
  std::exception_ptr error;
  const long n = static_cast<long>(configs.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    try {
      results[i] = run(configs[i]);
    } catch (...) {
#pragma omp critical(relaysim_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<SimResult> run_all_serial(const std::vector<SimConfig> &configs) {
  std::vector<SimResult> results;
  results.reserve(configs.size());
  for (const SimConfig &c : configs) results.push_back(run(c));
  return results;
}

std::vector<SimResult> sweep(const SweepSpec &spec, int jobs) {
  return run_all(expand_sweep(spec), jobs);
}

std::vector<SimResult> sweep_serial(const SweepSpec &spec) {
  return run_all_serial(expand_sweep(spec));
}

} // namespace relaysim
