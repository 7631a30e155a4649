#pragma once

#include <array>

#include "bellbox/events.hpp"

namespace bellbox {

/// Which probability model drives a battery run.
enum class Model { Quantum, Classical };

constexpr const char* to_string(Model m) {
  return m == Model::Quantum ? "quantum" : "classical";
}

/// An inequality left-hand side above this counts as a violation; exact
/// zero and round-off noise do not.
inline constexpr double kViolationThreshold = 1e-9;

/// Correlation function K = w(y,y) + w(n,n) - w(y,n) - w(n,y).
double correlation(const EventProbabilities& p);

/// Event probabilities of the classical experiment:
/// w(y,y) = w(n,n) = (sin^2 a cos^2 b + sin^2 b cos^2 a)/2,
/// w(y,n) = w(n,y) = (cos^2 a cos^2 b + sin^2 a sin^2 b)/2.
EventProbabilities classical_probabilities(double alpha, double beta);

/// |K(a,b) - K(a,b')| + |K(a',b) + K(a',b')| - 2. Positive means violated.
double bell_lhs(double k_ab, double k_abp, double k_apb, double k_apbp);

/// One polarizer configuration.
struct AnglePair {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Battery structure of the inequality: the four configurations (a, b),
/// (a, b'), (a', b), (a', b') generated by one angle quadruple. The
/// inequality's classical bound holds only for batteries of this shape.
std::array<AnglePair, 4> battery_from_angles(double alpha, double alpha_prime,
                                             double beta, double beta_prime);

/// The four configurations (0, pi/8), (0, 3pi/8), (pi/4, pi/8),
/// (pi/4, 3pi/8) used to test the inequality.
std::array<AnglePair, 4> standard_battery();

/// A four-configuration inequality test: the configurations, their
/// correlations, and the resulting left-hand side.
struct BellBattery {
  Model model = Model::Quantum;
  std::array<AnglePair, 4> configs{};
  std::array<double, 4> k{};
  double lhs = 0.0;
  bool violated = false;
};

/// Fills correlations from the chosen model's closed-form probabilities
/// and evaluates the inequality.
BellBattery run_battery(Model model, const std::array<AnglePair, 4>& battery);

/// Outcome of the single-configuration test at alpha = beta = pi/4.
enum class Verdict { Quantum, Classical, Inconclusive };

constexpr const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Quantum: return "quantum";
    case Verdict::Classical: return "classical";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

/// Compares measured probabilities against the two point templates
/// (0, 1/2, 1/2, 0) and (1/4, 1/4, 1/4, 1/4); a template matches when every
/// component deviates by at most tol.
Verdict discriminate(const EventProbabilities& p, double tol);

}  // namespace bellbox
