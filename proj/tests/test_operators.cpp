#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bellbox/bell.hpp"
#include "bellbox/errors.hpp"
#include "bellbox/operators.hpp"
#include "bellbox/quantum.hpp"
#include "test_helpers.hpp"

using namespace bellbox;
using testutil::AngleGen;
using testutil::check_close;
using testutil::check_ket4;
using testutil::check_probs;
using testutil::kPi;

namespace {

// Independent oracle: determinant by cofactor expansion along the first row.
double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double det4(const GramMatrix& g) {
  double result = 0.0;
  double sign = 1.0;
  for (int col = 0; col < 4; ++col) {
    double minor[3][3];
    for (int r = 1; r < 4; ++r) {
      int mc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == col) continue;
        minor[r - 1][mc++] = g.g[r][c];
      }
    }
    result += sign * g.g[0][col] * det3(minor);
    sign = -sign;
  }
  return result;
}

}  // namespace

TEST_CASE("tilde states at zero angles") {
  const TildeStates phi = tilde_states(0, 0);
  check_ket4(phi.phi1, Ket4{0, 1, 0, 0}, 1e-15);
  check_ket4(phi.phi2, Ket4{0, 0, -1, 0}, 1e-15);
}

TEST_CASE("phi3 and phi4 are angle independent") {
  AngleGen gen(31);
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 100; ++i) {
    const TildeStates phi = tilde_states(gen.angle(), gen.angle());
    check_ket4(phi.phi3, Ket4{0, r, r, 0}, 1e-15);
    check_ket4(phi.phi4, Ket4{r, 0, 0, r}, 1e-15);
  }
}

TEST_CASE("tilde states are normalized and pairwise orthogonal where required") {
  AngleGen gen(32);
  for (int i = 0; i < 1000; ++i) {
    const TildeStates phi = tilde_states(gen.angle(), gen.angle());
    for (int k = 0; k < 4; ++k) check_close(phi[k].norm_squared(), 1.0, 1e-12);
    check_close(inner(phi.phi1, phi.phi2), 0.0, 1e-12);
    check_close(inner(phi.phi3, phi.phi4), 0.0, 1e-12);
  }
}

TEST_CASE("overlap of phi1 with phi3 at (pi/8, pi/8)") {
  const TildeStates phi = tilde_states(kPi / 8, kPi / 8);
  check_close(inner(phi.phi1, phi.phi3), 0.5, 1e-12);
}

TEST_CASE("quasi weights at reference configurations") {
  const QuasiWeights zero = quasi_weights(kPi / 8, 0);
  check_close(zero.p1, 0.5, 0.0);
  check_close(zero.p2, 0.5, 0.0);
  check_close(zero.p3, 0.0, 0.0);
  check_close(zero.p4, 0.0, 0.0);

  const QuasiWeights diag = quasi_weights(kPi / 4, kPi / 4);
  check_close(diag.p3, 0.5, 1e-12);
  check_close(diag.p4, -0.5, 1e-12);

  const QuasiWeights eighth = quasi_weights(kPi / 8, kPi / 8);
  check_close(eighth.p3, 0.25, 1e-12);
  check_close(eighth.p4, -0.25, 1e-12);
}

TEST_CASE("quasi weights sum to one") {
  AngleGen gen(33);
  for (int i = 0; i < 1000; ++i) {
    check_close(quasi_weights(gen.angle(), gen.angle()).sum(), 1.0, 1e-12);
  }
}

TEST_CASE("qbb operator diagonal matches the closed form") {
  AngleGen gen(34);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.angle();
    const double b = gen.angle();
    const WeightedStateOperator op = qbb_operator(a, b);
    check_close(op.trace(), 1.0, 1e-12);
    check_probs(operator_probabilities(op), quantum_probabilities(a, b),
                1e-12);
  }
}

TEST_CASE("qbb operator drops to two terms when the coefficient vanishes") {
  const WeightedStateOperator op = qbb_operator(kPi / 8, 0);
  REQUIRE(op.terms.size() == 4);
  int nonzero = 0;
  for (const auto& term : op.terms) {
    if (term.weight != 0.0) ++nonzero;
  }
  CHECK(nonzero == 2);
}

TEST_CASE("classical operator diagonal matches the closed form") {
  AngleGen gen(35);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.angle();
    const double b = gen.angle();
    const WeightedStateOperator op = classical_operator(a, b);
    REQUIRE(op.terms.size() == 2);
    check_close(op.trace(), 1.0, 1e-12);
    check_probs(operator_probabilities(op), classical_probabilities(a, b),
                1e-12);
  }
}

TEST_CASE("classical and quantum operators agree when one side sits at zero") {
  AngleGen gen(36);
  for (int i = 0; i < 100; ++i) {
    const double b = gen.angle();
    check_probs(operator_probabilities(classical_operator(0, b)),
                operator_probabilities(qbb_operator(0, b)), 1e-12);
  }
  check_close(event_probability(classical_operator(kPi / 4, kPi / 8), Event::yy),
              0.25, 1e-12);
}

TEST_CASE("event probabilities at reference configurations") {
  check_close(event_probability(qbb_operator(0, kPi / 8), Event::yy),
              0.5 * std::sin(kPi / 8) * std::sin(kPi / 8), 1e-15);
  check_close(event_probability(classical_operator(kPi / 4, kPi / 4), Event::yy),
              0.25, 1e-12);
  check_close(event_probability(qbb_operator(kPi / 4, kPi / 4), Event::yy), 0.0,
              1e-15);
}

TEST_CASE("operator probabilities stay within [0,1] despite negative weights") {
  AngleGen gen(37);
  for (int i = 0; i < 1000; ++i) {
    const WeightedStateOperator op = qbb_operator(gen.angle(), gen.angle());
    const EventProbabilities p = operator_probabilities(op);
    for (const Event e : kAllEvents) {
      CHECK(p[e] >= -1e-15);
      CHECK(p[e] <= 1.0 + 1e-15);
    }
  }
}

TEST_CASE("interference terms redistribute probability between event pairs") {
  AngleGen gen(38);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.angle();
    const double b = gen.angle();
    const double half_p3 = 0.5 * quasi_weights(a, b).p3;
    const EventProbabilities quantum =
        operator_probabilities(qbb_operator(a, b));
    const EventProbabilities classical =
        operator_probabilities(classical_operator(a, b));
    check_close(quantum.w_yn - classical.w_yn, half_p3, 1e-12);
    check_close(quantum.w_ny - classical.w_ny, half_p3, 1e-12);
    check_close(quantum.w_yy - classical.w_yy, -half_p3, 1e-12);
    check_close(quantum.w_nn - classical.w_nn, -half_p3, 1e-12);
  }
}

TEST_CASE("gram matrix pattern") {
  AngleGen gen(39);
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.angle();
    const double b = gen.angle();
    const GramMatrix g = gram(a, b);
    const double g1 = r * std::cos(a + b);
    const double g2 = r * std::sin(a - b);

    for (int d = 0; d < 4; ++d) check_close(g.g[d][d], 1.0, 1e-12);
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        check_close(g.g[row][col], g.g[col][row], 1e-15);
        CHECK(g.g[row][col] >= -1.0 - 1e-12);
        CHECK(g.g[row][col] <= 1.0 + 1e-12);
      }
    }
    check_close(g.g[0][1], 0.0, 1e-12);
    check_close(g.g[2][3], 0.0, 1e-12);
    check_close(g.g[0][2], g1, 1e-12);
    check_close(g.g[1][2], -g1, 1e-12);
    check_close(g.g[0][3], g2, 1e-12);
    check_close(g.g[1][3], g2, 1e-12);
  }
}

TEST_CASE("gram elements at reference configurations") {
  const double r = 1.0 / std::sqrt(2.0);
  const GramMatrix zero = gram(0, 0);
  check_close(zero.g[0][2], r, 1e-15);
  check_close(zero.g[0][3], 0.0, 1e-15);

  const GramMatrix eighth = gram(kPi / 8, kPi / 8);
  check_close(eighth.g[0][2], 0.5, 1e-12);
  check_close(eighth.g[0][3], 0.0, 1e-12);
}

TEST_CASE("gram determinant closed form equals cofactor expansion") {
  // 50x50 grid over the full angle range.
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const double a = kPi * i / 49.0;
      const double b = kPi * j / 49.0;
      check_close(gram_determinant(a, b), det4(gram(a, b)), 1e-10);
    }
  }
}

TEST_CASE("gram determinant at reference configurations") {
  // Frozen from the cofactor-expansion oracle: sin^2(a+b) cos^2(a-b).
  const double s8 = std::sin(kPi / 8);
  const double c8 = std::cos(kPi / 8);
  check_close(gram_determinant(kPi / 8, 0), s8 * s8 * c8 * c8, 1e-12);
  check_close(gram_determinant(kPi / 8, 0), 0.125, 1e-12);
  check_close(gram_determinant(kPi / 8, kPi / 8), 0.5, 1e-12);
  check_close(gram_determinant(kPi / 4, kPi / 4), 1.0, 1e-12);
  // Vanishes exactly where the tilde states become dependent.
  check_close(gram_determinant(0, 0), 0.0, 1e-12);
  check_close(gram_determinant(kPi / 2, kPi / 2), 0.0, 1e-12);
  check_close(det4(gram(0, 0)), 0.0, 1e-10);
}

TEST_CASE("independence flag follows the interference coefficient") {
  CHECK_FALSE(linearly_independent(kPi / 8, 0));
  CHECK(linearly_independent(kPi / 8, kPi / 8));
  CHECK_FALSE(linearly_independent(kPi / 2, kPi / 4));
}

TEST_CASE("vanishing quasi weights do not imply separability and vice versa") {
  // At (pi/8, 0) the weights vanish but the state is entangled.
  const QuasiWeights at_zero = quasi_weights(kPi / 8, 0);
  check_close(at_zero.p3, 0.0, 0.0);
  check_close(at_zero.p4, 0.0, 0.0);
  const double defect = separability_defect(
      qbb_state(kPi / 8, 0, SignConvention::Phenomenological));
  check_close(std::abs(defect), std::sqrt(2.0) / 4.0, 1e-12);
  CHECK(std::abs(defect) > 0.3);

  // At (3pi/8, pi/8) the state is separable but the weights are not zero.
  const double defect45 = separability_defect(
      qbb_state(3 * kPi / 8, kPi / 8, SignConvention::Phenomenological));
  check_close(defect45, 0.0, 1e-12);
  check_close(quasi_weights(3 * kPi / 8, kPi / 8).p3, 0.25, 1e-12);
}

TEST_CASE("single-entry mixture reproduces the plain operator") {
  const MixtureConfig config{{{1.0, 0.3, 1.1}}};
  check_probs(operator_probabilities(mixture(config)),
              operator_probabilities(qbb_operator(0.3, 1.1)), 1e-12);
}

TEST_CASE("two-entry mixture averages the event probabilities") {
  const MixtureConfig config{
      {{0.5, 0.0, kPi / 8}, {0.5, 0.0, 3 * kPi / 8}}};
  const WeightedStateOperator op = mixture(config);
  check_close(op.trace(), 1.0, 1e-12);
  check_close(event_probability(op, Event::yy), 0.25, 1e-12);
}

TEST_CASE("mixture is linear in the weights") {
  const double a1 = 0.2, b1 = 0.9, a2 = 1.3, b2 = 0.4;
  const MixtureConfig config{{{0.3, a1, b1}, {0.7, a2, b2}}};
  const EventProbabilities mixed = operator_probabilities(mixture(config));
  const EventProbabilities p1 = quantum_probabilities(a1, b1);
  const EventProbabilities p2 = quantum_probabilities(a2, b2);
  for (const Event e : kAllEvents) {
    check_close(mixed[e], 0.3 * p1[e] + 0.7 * p2[e], 1e-12);
  }
}

TEST_CASE("mixture rejects invalid weights") {
  CHECK_THROWS_AS(mixture(MixtureConfig{{{0.4, 0, 0}, {0.5, 0, 0}}}),
                  InvalidWeights);
  CHECK_THROWS_AS(mixture(MixtureConfig{{{-0.1, 0, 0}, {1.1, 0, 0}}}),
                  InvalidWeights);
}
