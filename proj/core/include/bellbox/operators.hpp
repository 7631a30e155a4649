#pragma once

#include <array>
#include <vector>

#include "bellbox/events.hpp"
#include "bellbox/statevec.hpp"

namespace bellbox {

/// The four normalized states the statistical operator is built from.
/// phi1/phi2 are the two rescaled branch states; phi3 spans the mixed-event
/// pair (a probability source), phi4 the equal-event pair (a sink).
struct TildeStates {
  Ket4 phi1;
  Ket4 phi2;
  Ket4 phi3;
  Ket4 phi4;

  const Ket4& operator[](int i) const {
    return i == 0 ? phi1 : i == 1 ? phi2 : i == 2 ? phi3 : phi4;
  }
};

TildeStates tilde_states(double alpha, double beta);

/// sin(a) sin(b) cos(a) cos(b) — the coefficient that switches the
/// interference weights p3/p4 on and off.
double interference_coefficient(double alpha, double beta);

/// Operator weights: p1 = p2 = 1/2, p3 = -p4 = 2 c(a,b). p4 may be
/// negative (a quasi-probability); the four always sum to 1.
struct QuasiWeights {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double p4 = 0.0;

  double operator[](int i) const {
    return i == 0 ? p1 : i == 1 ? p2 : i == 2 ? p3 : p4;
  }
  double sum() const { return p1 + p2 + p3 + p4; }
};

QuasiWeights quasi_weights(double alpha, double beta);

/// Statistical operator as an ordered weighted sum of projectors onto
/// normalized pure states. Weights may be negative; they sum to 1.
struct WeightedStateOperator {
  struct Term {
    double weight = 0.0;
    Ket4 state;
  };
  std::vector<Term> terms;

  double trace() const;
};

/// Four-term operator sum_i p_i |phi_i><phi_i| for one configuration.
WeightedStateOperator qbb_operator(double alpha, double beta);

/// Two-term operator (1/2, phi1), (1/2, phi2): the branch probabilities
/// added without the interference terms.
WeightedStateOperator classical_operator(double alpha, double beta);

/// Diagonal matrix element of the operator on the event's basis vector:
/// sum_i weight_i * amplitude_i(event)^2.
double event_probability(const WeightedStateOperator& op, Event event);

/// All four diagonal elements at once.
EventProbabilities operator_probabilities(const WeightedStateOperator& op);

/// Symmetric 4x4 matrix of pairwise inner products of the tilde states.
struct GramMatrix {
  std::array<std::array<double, 4>, 4> g{};
};

GramMatrix gram(double alpha, double beta);

/// Closed-form determinant of gram(alpha, beta):
/// (1 - 2 g1^2)(1 - 2 g2^2) = sin^2(a+b) cos^2(a-b).
double gram_determinant(double alpha, double beta);

/// True when |interference_coefficient| exceeds tol, i.e. when the weights
/// p3/p4 are switched on and the operator needs all four tilde states.
bool linearly_independent(double alpha, double beta, double tol = 1e-12);

/// An incoherent mixture of configurations with classical weights r_k.
struct MixtureConfig {
  struct Entry {
    double r = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
  };
  std::vector<Entry> entries;
};

/// Concatenates the per-configuration operators scaled by r_k. Entries are
/// not deduplicated; repeated configurations add through linearity.
/// Throws InvalidWeights unless every r_k >= 0 and sum r_k = 1 within tol.
WeightedStateOperator mixture(const MixtureConfig& config, double tol = 1e-9);

}  // namespace bellbox
