#include "bellbox/operators.hpp"

#include <cmath>
#include <string>

#include "bellbox/errors.hpp"

namespace bellbox {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

TildeStates tilde_states(double alpha, double beta) {
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  TildeStates out;
  out.phi1 = Ket4{-ca * sb, ca * cb, -sa * sb, sa * cb};
  out.phi2 = Ket4{sa * cb, sa * sb, -ca * cb, -ca * sb};
  out.phi3 = Ket4{0.0, kInvSqrt2, kInvSqrt2, 0.0};
  out.phi4 = Ket4{kInvSqrt2, 0.0, 0.0, kInvSqrt2};
  return out;
}

double interference_coefficient(double alpha, double beta) {
  return std::sin(alpha) * std::sin(beta) * std::cos(alpha) * std::cos(beta);
}

QuasiWeights quasi_weights(double alpha, double beta) {
  const double c = interference_coefficient(alpha, beta);
  return QuasiWeights{0.5, 0.5, 2.0 * c, -2.0 * c};
}

double WeightedStateOperator::trace() const {
  double sum = 0.0;
  for (const auto& term : terms) sum += term.weight;
  return sum;
}

WeightedStateOperator qbb_operator(double alpha, double beta) {
  const TildeStates phi = tilde_states(alpha, beta);
  const QuasiWeights p = quasi_weights(alpha, beta);
  WeightedStateOperator op;
  op.terms = {{p.p1, phi.phi1}, {p.p2, phi.phi2}, {p.p3, phi.phi3},
              {p.p4, phi.phi4}};
  return op;
}

WeightedStateOperator classical_operator(double alpha, double beta) {
  const TildeStates phi = tilde_states(alpha, beta);
  WeightedStateOperator op;
  op.terms = {{0.5, phi.phi1}, {0.5, phi.phi2}};
  return op;
}

double event_probability(const WeightedStateOperator& op, Event event) {
  double w = 0.0;
  for (const auto& term : op.terms) {
    const double amplitude = term.state[event];
    w += term.weight * amplitude * amplitude;
  }
  return w;
}

EventProbabilities operator_probabilities(const WeightedStateOperator& op) {
  return EventProbabilities{
      event_probability(op, Event::yy), event_probability(op, Event::yn),
      event_probability(op, Event::ny), event_probability(op, Event::nn)};
}

GramMatrix gram(double alpha, double beta) {
  const TildeStates phi = tilde_states(alpha, beta);
  GramMatrix out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out.g[i][j] = inner(phi[i], phi[j]);
    }
  }
  return out;
}

double gram_determinant(double alpha, double beta) {
  const double g1 = kInvSqrt2 * std::cos(alpha + beta);
  const double g2 = kInvSqrt2 * std::sin(alpha - beta);
  return (1.0 - 2.0 * g1 * g1) * (1.0 - 2.0 * g2 * g2);
}

bool linearly_independent(double alpha, double beta, double tol) {
  return std::abs(interference_coefficient(alpha, beta)) > tol;
}

WeightedStateOperator mixture(const MixtureConfig& config, double tol) {
  double sum = 0.0;
  for (const auto& entry : config.entries) {
    if (entry.r < 0.0) {
      throw InvalidWeights("mixture: negative weight " +
                           std::to_string(entry.r));
    }
    sum += entry.r;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw InvalidWeights("mixture: weights sum to " + std::to_string(sum) +
                         ", expected 1");
  }
  WeightedStateOperator op;
  op.terms.reserve(config.entries.size() * 4);
  for (const auto& entry : config.entries) {
    const WeightedStateOperator component = qbb_operator(entry.alpha, entry.beta);
    for (const auto& term : component.terms) {
      op.terms.push_back({entry.r * term.weight, term.state});
    }
  }
  return op;
}

}  // namespace bellbox
