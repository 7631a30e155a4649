#include "bellbox/marbles.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "bellbox/errors.hpp"

namespace bellbox {

MarbleBox local_box(double theta, int box_size) {
  const double c = std::cos(theta);
  const int white = static_cast<int>(std::round(box_size * c * c));
  return MarbleBox{white, box_size - white};
}

namespace {

// Probability that a side reports the color it received.
double keep_probability(const MarbleProtocol& protocol, bool right_side) {
  const double theta = right_side ? protocol.beta : protocol.alpha;
  const bool swapped = right_side && protocol.swap_right;
  if (protocol.mode == MarbleMode::Exact) {
    const double c = std::cos(theta);
    const double keep = c * c;
    return swapped ? 1.0 - keep : keep;
  }
  const MarbleBox box = local_box(theta, protocol.box_size);
  const double keep = box.draw_white_probability();
  return swapped ? 1.0 - keep : keep;
}

std::array<std::uint64_t, 4> run_range(const MarbleProtocol& protocol,
                                       std::uint64_t seed, std::uint64_t begin,
                                       std::uint64_t end) {
  std::array<std::uint64_t, 4> counts{};
  for (std::uint64_t i = begin; i < end; ++i) {
    SplitMix64 rng = trial_stream(seed, i);
    counts[static_cast<std::size_t>(run_trial(protocol, rng))] += 1;
  }
  return counts;
}

}  // namespace

Event run_trial(const MarbleProtocol& protocol, SplitMix64& rng) {
  // Anti-correlated primary pair, sides assigned blindly.
  const bool left_white = rng.next_unit() < 0.5;
  const bool keep_left = rng.next_unit() < keep_probability(protocol, false);
  const bool keep_right = rng.next_unit() < keep_probability(protocol, true);

  const bool left_on = keep_left ? left_white : !left_white;
  const bool right_on = keep_right ? !left_white : left_white;
  if (left_on) return right_on ? Event::yy : Event::yn;
  return right_on ? Event::ny : Event::nn;
}

EstimationReport estimate(const MarbleProtocol& protocol, std::uint64_t trials,
                          std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw ZeroTrials();

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  // Thread overhead dominates small runs.
  if (trials < 16384) threads = 1;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, trials));

  std::array<std::uint64_t, 4> counts{};
  if (threads == 1) {
    counts = run_range(protocol, seed, 0, trials);
  } else {
    std::vector<std::array<std::uint64_t, 4>> partial(threads);
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const std::uint64_t chunk = trials / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = t * chunk;
      const std::uint64_t end = t + 1 == threads ? trials : begin + chunk;
      workers.emplace_back([&, t, begin, end] {
        partial[t] = run_range(protocol, seed, begin, end);
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& p : partial) {
      for (int e = 0; e < 4; ++e) counts[e] += p[e];
    }
  }

  EstimationReport report;
  report.trials = trials;
  report.seed = seed;
  report.counts = counts;
  const double n = static_cast<double>(trials);
  const double p_yy = counts[0] / n;
  const double p_yn = counts[1] / n;
  const double p_ny = counts[2] / n;
  const double p_nn = counts[3] / n;
  report.probabilities = EventProbabilities{p_yy, p_yn, p_ny, p_nn};
  for (int e = 0; e < 4; ++e) {
    const double p = counts[e] / n;
    report.std_error[e] = std::sqrt(p * (1.0 - p) / n);
  }
  report.correlation = p_yy + p_nn - p_yn - p_ny;
  return report;
}

EventProbabilities exact_chain_probabilities(const MarbleProtocol& protocol) {
  const double keep_left = keep_probability(protocol, false);
  const double keep_right = keep_probability(protocol, true);

  std::array<double, 4> w{};
  // 2 primary assignments x 2 left outcomes x 2 right outcomes.
  for (int assignment = 0; assignment < 2; ++assignment) {
    const bool left_white = assignment == 0;
    for (int flip_left = 0; flip_left < 2; ++flip_left) {
      for (int flip_right = 0; flip_right < 2; ++flip_right) {
        const double p = 0.5 *
                         (flip_left ? 1.0 - keep_left : keep_left) *
                         (flip_right ? 1.0 - keep_right : keep_right);
        const bool left_on = flip_left ? !left_white : left_white;
        const bool right_on = flip_right ? left_white : !left_white;
        const Event e = left_on ? (right_on ? Event::yy : Event::yn)
                                : (right_on ? Event::ny : Event::nn);
        w[static_cast<std::size_t>(e)] += p;
      }
    }
  }
  return EventProbabilities{w[0], w[1], w[2], w[3]};
}

}  // namespace bellbox
