#pragma once

#include <cmath>

#include <doctest.h>

#include "bellbox/events.hpp"
#include "bellbox/rng.hpp"
#include "bellbox/statevec.hpp"

namespace testutil {

inline constexpr double kPi = 3.14159265358979323846;

inline void check_close(double actual, double expected, double tol) {
  CAPTURE(actual);
  CAPTURE(expected);
  CHECK(std::abs(actual - expected) <= tol);
}

inline void check_ket4(const bellbox::Ket4& actual, const bellbox::Ket4& expected,
                       double tol) {
  check_close(actual.c11, expected.c11, tol);
  check_close(actual.c12, expected.c12, tol);
  check_close(actual.c21, expected.c21, tol);
  check_close(actual.c22, expected.c22, tol);
}

inline void check_probs(const bellbox::EventProbabilities& actual,
                        const bellbox::EventProbabilities& expected, double tol) {
  check_close(actual.w_yy, expected.w_yy, tol);
  check_close(actual.w_yn, expected.w_yn, tol);
  check_close(actual.w_ny, expected.w_ny, tol);
  check_close(actual.w_nn, expected.w_nn, tol);
}

// Deterministic angle source for property tests.
class AngleGen {
 public:
  explicit AngleGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * rng_.next_unit();
  }
  double angle() { return uniform(0.0, kPi); }
  bellbox::Ket2 unit_ket2() {
    const double theta = uniform(0.0, 2.0 * kPi);
    return bellbox::Ket2{std::cos(theta), std::sin(theta)};
  }

 private:
  bellbox::SplitMix64 rng_;
};

}  // namespace testutil
