#include "relaysim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace relaysim {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string to_csv(const std::vector<SimResult> &results) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const SimResult &r : results) {
    const SimConfig &c = r.config;
    out += c.row_label();
    out += c.mode == BufferMode::Adaptive ? ",adaptive," : ",fixed,";
    out += std::to_string(c.net.num_relays) + ',' + std::to_string(c.net.num_antennas) + ',';
    out += format_number(c.snr_db) + ',' + format_number(c.sigma_rr_db) + ',';
    out += format_number(c.q_max) + ',' + format_number(c.policy_cfg.c0) + ',';
    out += std::to_string(c.slots) + ',' + std::to_string(c.seed) + ',';
    out += format_number(r.avg_rate_bpcu) + ',';
    if (r.outage_prob) out += format_number(*r.outage_prob);
    out += ',' + std::to_string(r.attempts()) + ',' + std::to_string(r.successes()) + '\n';
  }
  return out;
}

void write_csv(const std::vector<SimResult> &results, const std::filesystem::path &path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << to_csv(results);
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

} // namespace relaysim
