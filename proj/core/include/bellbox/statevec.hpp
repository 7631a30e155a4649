#pragma once

#include <span>
#include <utility>

#include "bellbox/events.hpp"

namespace bellbox {

/// Tolerance for analytic identities (normalization, separability, symmetry
/// checks). Double precision leaves ample headroom below this for the trig
/// expressions used throughout.
inline constexpr double kAnalyticTol = 1e-12;

/// Real-amplitude state of one 2-dim local space. Component a1 sits on the
/// "lamp on" basis vector, a2 on "lamp off".
struct Ket2 {
  double a1 = 0.0;
  double a2 = 0.0;

  double norm_squared() const { return a1 * a1 + a2 * a2; }
  double norm() const;
  bool is_normalized(double tol = kAnalyticTol) const;
};

/// Real-amplitude state of the 4-dim product space; c_ik multiplies the
/// basis vector |i on side A, k on side B> with 1 = on, 2 = off. Component
/// order matches the event order (yy, yn, ny, nn).
struct Ket4 {
  double c11 = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
  double c22 = 0.0;

  double norm_squared() const {
    return c11 * c11 + c12 * c12 + c21 * c21 + c22 * c22;
  }
  double norm() const;
  bool is_normalized(double tol = kAnalyticTol) const;

  constexpr double operator[](Event e) const {
    switch (e) {
      case Event::yy: return c11;
      case Event::yn: return c12;
      case Event::ny: return c21;
      case Event::nn: return c22;
    }
    return 0.0;
  }
};

double inner(const Ket2& a, const Ket2& b);
double inner(const Ket4& a, const Ket4& b);

/// Direct product: result c_ik = left.a_i * right.a_k.
Ket4 tensor(const Ket2& left, const Ket2& right);

/// One term of a linear combination of product-space states.
struct WeightedKet4 {
  double coefficient = 0.0;
  Ket4 state;
};

/// Componentwise linear combination. No implicit normalization; the caller
/// owns the coefficients. Requires a non-empty term list.
Ket4 superpose(std::span<const WeightedKet4> terms);

/// c11*c22 - c12*c21. Zero (within tolerance) exactly when the state is a
/// direct product of two local states.
double separability_defect(const Ket4& state);

/// Recovers local factors of a normalized product state. Magnitudes come
/// from the row/column sums of squared amplitudes; signs are fixed by taking
/// the nonnegative root for the left factor's first nonzero component and
/// solving the rest from the largest-magnitude amplitudes. The result is
/// unique up to a shared sign flip of both factors.
///
/// Throws NotSeparable if |separability_defect| > tol, SignAssignmentFailure
/// if no sign pattern reproduces the state within tolerance.
std::pair<Ket2, Ket2> factorize(const Ket4& state, double tol = kAnalyticTol);

}  // namespace bellbox
