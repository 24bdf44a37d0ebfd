#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "relaysim/engine.hpp"

namespace relaysim {

inline constexpr const char *kCsvHeader =
    "policy,mode,K,nu,snr_db,sigma_rr_db,q_max,c0,slots,seed,avg_rate_bpcu,outage_prob,attempts,"
    "successes";

/// Six significant digits, "inf" for infinities.
std::string format_number(double v);

std::string to_csv(const std::vector<SimResult> &results);
/// Throws std::runtime_error when the file cannot be written.
void write_csv(const std::vector<SimResult> &results, const std::filesystem::path &path);

} // namespace relaysim
