#include "relaysim/buffers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace relaysim {

namespace {

constexpr double kSnapTolerance = 8.0 * std::numeric_limits<double>::epsilon();

} // namespace

BufferState::BufferState(int relays, double capacity, BufferMode mode, double initial)
    : q_(static_cast<std::size_t>(relays), 0.0), capacity_(capacity), mode_(mode) {
  if (relays < 1) throw std::invalid_argument("buffer: relay count must be >= 1");
  if (!(capacity >= 0.0)) throw std::invalid_argument("buffer: capacity must be >= 0");
  if (mode == BufferMode::Fixed && !infinite() && capacity != std::floor(capacity))
    throw std::invalid_argument("buffer: fixed-mode capacity must be a whole packet count");
  for (int k = 0; k < relays; ++k) set(k, initial);
}

double BufferState::total() const noexcept {
  double s = 0.0;
  for (double q : q_) s += q;
  return s;
}

void BufferState::set(int k, double value) {
  if (!(value >= 0.0) || value > capacity_)
    throw InvariantViolation("buffer occupancy " + std::to_string(value) +
                             " outside [0, q_max] at relay " + std::to_string(k));
  if (mode_ == BufferMode::Fixed && value != std::floor(value))
    throw InvariantViolation("fixed-mode occupancy must be integral");
  q_[k] = value;
}

void BufferState::add(int k, double amount) {
  double v = q_[k] + amount;
  if (v > capacity_ && v - capacity_ <= kSnapTolerance * capacity_) v = capacity_;
  set(k, v);
}

void BufferState::remove(int k, double amount) {
  double v = q_[k] - amount;
  if (v < 0.0 && -v <= kSnapTolerance * std::max(1.0, q_[k])) v = 0.0;
  set(k, v);
}

CappedRates cap_rates(double gamma_sr, double gamma_td, double q_rx, double q_tx,
                      double q_max) noexcept {
  CappedRates c;
  c.c_sr = std::max(0.0, std::min(std::log2(1.0 + gamma_sr), q_max - q_rx));
  c.c_td = std::max(0.0, std::min(std::log2(1.0 + gamma_td), q_tx));
  return c;
}

void update_adaptive(BufferState &buf, std::optional<int> rx, std::optional<int> tx,
                     double c_sr, double c_td) {
  if (rx && tx && *rx == *tx)
    throw InvariantViolation("update_adaptive: receiving and transmitting relay coincide");
  if (c_sr < 0.0 || c_td < 0.0) throw InvariantViolation("update_adaptive: negative rate");
  if (tx) buf.remove(*tx, c_td);
  if (rx) buf.add(*rx, c_sr);
}

void update_fixed(BufferState &buf, std::optional<int> rx, std::optional<int> tx, bool s_sr,
                  bool s_td) {
  if (rx && tx && *rx == *tx)
    throw InvariantViolation("update_fixed: receiving and transmitting relay coincide");
  if (rx && s_sr) buf.set(*rx, std::min(buf.occupancy(*rx) + 1.0, buf.capacity()));
  if (tx && s_td) buf.set(*tx, std::max(buf.occupancy(*tx) - 1.0, 0.0));
}

std::vector<RelayPair> feasible_pairs(const BufferState &buf) {
  std::vector<RelayPair> pairs;
  const int K = buf.relays();
  const bool need_data = buf.mode() == BufferMode::Fixed;
  for (int r = 0; r < K; ++r) {
    if (buf.full(r)) continue;
    for (int t = 0; t < K; ++t) {
      if (t == r || (need_data && !buf.has_data(t))) continue;
      pairs.push_back({r, t});
    }
  }
  return pairs;
}

} // namespace relaysim
