#pragma once

#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace relaysim {

/// Capacity sentinel for unbounded relay buffers.
inline constexpr double kInfiniteCapacity = std::numeric_limits<double>::infinity();

/// Adaptive: occupancies in bits per channel use. Fixed: whole packets.
enum class BufferMode { Adaptive, Fixed };

/// A queue update that would break 0 <= q <= q_max. Indicates a caller bug.
class InvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

struct RelayPair {
  int rx = 0;
  int tx = 0;
  bool operator==(const RelayPair &) const = default;
};

class BufferState {
public:
  BufferState(int relays, double capacity, BufferMode mode, double initial = 0.0);

  int relays() const noexcept { return static_cast<int>(q_.size()); }
  double capacity() const noexcept { return capacity_; }
  bool infinite() const noexcept { return capacity_ == kInfiniteCapacity; }
  BufferMode mode() const noexcept { return mode_; }

  double occupancy(int k) const noexcept { return q_[k]; }
  std::span<const double> occupancies() const noexcept { return q_; }
  double total() const noexcept;

  /// Cannot accept more data.
  bool full(int k) const noexcept { return !infinite() && q_[k] >= capacity_; }
  /// Holds data: at least one packet (fixed) or any positive amount (adaptive).
  bool has_data(int k) const noexcept {
    return mode_ == BufferMode::Fixed ? q_[k] >= 1.0 : q_[k] > 0.0;
  }

  /// Overwrites one occupancy; throws InvariantViolation when out of range.
  void set(int k, double value);

  /// Adds `amount` to relay k, snapping rounding overshoot onto the capacity.
  void add(int k, double amount);
  /// Removes `amount` from relay k.
  void remove(int k, double amount);

  bool operator==(const BufferState &) const = default;

private:
  std::vector<double> q_;
  double capacity_;
  BufferMode mode_;
};

struct CappedRates {
  double c_sr = 0.0;
  double c_td = 0.0;
};

/// c_sr = min(log2(1 + gamma_sr), q_max - q_rx), c_td = min(log2(1 + gamma_td), q_tx).
CappedRates cap_rates(double gamma_sr, double gamma_td, double q_rx, double q_tx,
                      double q_max) noexcept;

/// Adaptive-rate queue update for an optional receiving and transmitting relay.
void update_adaptive(BufferState &buf, std::optional<int> rx, std::optional<int> tx,
                     double c_sr, double c_td);

/// Fixed-rate update: one packet in on S->R success, one packet out on R->D
/// success, clamped into [0, q_max]. Failed transmissions leave queues alone.
void update_fixed(BufferState &buf, std::optional<int> rx, std::optional<int> tx,
                  bool s_sr, bool s_td);

/// Ordered pairs (rx, tx), rx != tx, with rx not full. Fixed mode also needs
/// tx to hold a packet; adaptive mode keeps empty transmitters selectable (the
/// R->D rate then caps to zero) so the source can fill empty buffers.
std::vector<RelayPair> feasible_pairs(const BufferState &buf);

} // namespace relaysim
