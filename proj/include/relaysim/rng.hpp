#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

namespace relaysim {

/// Seeded random stream owned by a single simulation run.
///
/// Uniforms take the top 53 bits of a 64-bit Mersenne Twister. Gaussian
/// variates use the Marsaglia polar method; each call to gauss_pair()
/// returns both variates of one accepted polar sample and caches nothing,
/// so the draw order is fully determined by the sequence of calls.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 1) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on [0, 1).
  double uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n) noexcept;

  /// Two independent standard normal variates.
  std::pair<double, double> gauss_pair() noexcept;

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Derives a decorrelated seed for an auxiliary stream (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

} // namespace relaysim
