#pragma once

#include <array>
#include <cstdint>

#include "bellbox/events.hpp"
#include "bellbox/rng.hpp"

namespace bellbox {

/// A box of marbles; drawing is Bernoulli with P(white) = white / total.
struct MarbleBox {
  int white = 0;
  int black = 0;

  int total() const { return white + black; }
  double draw_white_probability() const {
    return static_cast<double>(white) / static_cast<double>(total());
  }
};

/// Box aligned with a polarizer at angle theta: white count rounds
/// box_size * cos^2(theta) half away from zero. The orthogonal box is the
/// complement (white and black swapped).
MarbleBox local_box(double theta, int box_size);

/// Exact uses Bernoulli draws with the exact cos^2/sin^2 probabilities;
/// Quantized draws from integer marble boxes of box_size marbles.
enum class MarbleMode { Exact, Quantized };

constexpr const char* to_string(MarbleMode m) {
  return m == MarbleMode::Exact ? "exact" : "quantized";
}

/// One experimental configuration of the marble experiment. swap_right
/// exchanges the white-aligned and black-aligned boxes on the right side,
/// which realizes the complementary-angle configuration without moving the
/// polarizer (cos^2 and sin^2 trade places).
struct MarbleProtocol {
  double alpha = 0.0;
  double beta = 0.0;
  MarbleMode mode = MarbleMode::Exact;
  int box_size = 20;
  bool swap_right = false;
};

/// Trial counts per event plus the statistics derived from them.
struct EstimationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 4> counts{};   // indexed by Event order
  EventProbabilities probabilities;        // counts / trials
  std::array<double, 4> std_error{};       // sqrt(p(1-p)/trials) from counts
  double correlation = 0.0;

  std::uint64_t count(Event e) const {
    return counts[static_cast<std::size_t>(e)];
  }
};

/// One run of the protocol. Consumes at most kDrawsPerTrial draws from the
/// stream, in a fixed order: side assignment of the anti-correlated primary
/// pair, then the left local step, then the right local step. A side keeps
/// the incoming color with its keep probability and flips it otherwise;
/// white maps to "lamp on".
Event run_trial(const MarbleProtocol& protocol, SplitMix64& rng);

/// Runs `trials` independent trials with per-trial streams derived from
/// (seed, trial_index) and aggregates counts. Deterministic for fixed
/// (protocol, trials, seed); threads = 0 picks a worker count automatically
/// and never changes the result. Throws ZeroTrials if trials < 1.
EstimationReport estimate(const MarbleProtocol& protocol, std::uint64_t trials,
                          std::uint64_t seed, unsigned threads = 0);

/// Exact event probabilities of the protocol's probability chain, by
/// enumerating the 2 primary assignments x 2 left outcomes x 2 right
/// outcomes. In Exact mode this reproduces the closed-form classical
/// probabilities; in Quantized mode it uses the integer box ratios.
EventProbabilities exact_chain_probabilities(const MarbleProtocol& protocol);

}  // namespace bellbox
