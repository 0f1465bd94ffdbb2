#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace srt {

// Stafford mix 13 finalizer: a full-avalanche bijection on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based per-trial random stream. The state and increment are both
// derived from (seed, trial), so any partitioning of trials across workers
// draws identical values: results depend only on (seed, trial index), never
// on scheduling.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) {
    const std::uint64_t a =
        mix64(seed + 0x9e3779b97f4a7c15ull * (trial + 1));
    const std::uint64_t b =
        mix64(a ^ mix64(trial + 0x6a09e667f3bcc909ull + seed));
    state_ = a;
    inc_ = b | 1ull;  // odd increments walk the full 2^64 cycle
  }

  std::uint64_t next_u64() {
    state_ += inc_;
    return mix64(state_);
  }

  // Uniform on (0, 1]; safe as a log() argument.
  double next_unit_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_unit() < p; }

  // Circularly-symmetric complex Gaussian with E|h|^2 = variance, via
  // Box-Muller (fixed draw count keeps stream positions predictable).
  std::complex<double> next_cgauss(double variance) {
    const double amp = std::sqrt(-std::log(next_unit_pos()) * variance);
    const double phase = 2.0 * std::numbers::pi * next_unit();
    return {amp * std::cos(phase), amp * std::sin(phase)};
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
};

}  // namespace srt
