#pragma once

#include <cstdint>

namespace bellbox {

/// SplitMix64 (Steele/Lea/Flood; the generator used to seed the xoshiro
/// family). State advances by the golden-ratio increment and each output is
/// an avalanche mix of the state, so the sequence is effectively a
/// counter-based generator: output n is mix64(seed + (n+1)*gamma).
///
/// Pure integer arithmetic; identical output on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Counters reserved per trial; a trial may consume at most this many draws.
inline constexpr std::uint64_t kDrawsPerTrial = 4;

/// Stream for one trial: a SplitMix64 positioned at the trial's disjoint
/// counter block, so draw j of trial i reads counter seed + (i*4 + j + 1).
/// Streams depend only on (seed, trial_index); trials can therefore run in
/// any order, or in parallel, and aggregate to identical counts.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial_index) {
  return SplitMix64(seed + trial_index * (kDrawsPerTrial * 0x9E3779B97F4A7C15ULL));
}

}  // namespace bellbox
