#include "bellbox/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bellbox/errors.hpp"

namespace bellbox {

double Ket2::norm() const { return std::sqrt(norm_squared()); }

bool Ket2::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

double Ket4::norm() const { return std::sqrt(norm_squared()); }

bool Ket4::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

double inner(const Ket2& a, const Ket2& b) {
  return a.a1 * b.a1 + a.a2 * b.a2;
}

double inner(const Ket4& a, const Ket4& b) {
  return a.c11 * b.c11 + a.c12 * b.c12 + a.c21 * b.c21 + a.c22 * b.c22;
}

Ket4 tensor(const Ket2& left, const Ket2& right) {
  return Ket4{left.a1 * right.a1, left.a1 * right.a2, left.a2 * right.a1,
              left.a2 * right.a2};
}

Ket4 superpose(std::span<const WeightedKet4> terms) {
  if (terms.empty()) {
    throw std::invalid_argument("superpose: term list must be non-empty");
  }
  Ket4 out;
  for (const auto& [coefficient, state] : terms) {
    out.c11 += coefficient * state.c11;
    out.c12 += coefficient * state.c12;
    out.c21 += coefficient * state.c21;
    out.c22 += coefficient * state.c22;
  }
  return out;
}

double separability_defect(const Ket4& state) {
  return state.c11 * state.c22 - state.c12 * state.c21;
}

namespace {

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

std::pair<Ket2, Ket2> factorize(const Ket4& state, double tol) {
  const double defect = separability_defect(state);
  if (std::abs(defect) > tol) {
    throw NotSeparable(defect, tol);
  }
  if (!state.is_normalized(1e-9)) {
    throw std::invalid_argument("factorize: state must be normalized");
  }

  // Row/column sums of squares give the factor magnitudes.
  const double rows[2][2] = {{state.c11, state.c12}, {state.c21, state.c22}};
  double lmag[2] = {std::sqrt(rows[0][0] * rows[0][0] + rows[0][1] * rows[0][1]),
                    std::sqrt(rows[1][0] * rows[1][0] + rows[1][1] * rows[1][1])};
  double rmag[2] = {std::sqrt(rows[0][0] * rows[0][0] + rows[1][0] * rows[1][0]),
                    std::sqrt(rows[0][1] * rows[0][1] + rows[1][1] * rows[1][1])};

  const int pivot = lmag[0] > tol ? 0 : 1;
  if (lmag[pivot] <= tol) {
    throw SignAssignmentFailure("factorize: state has no nonzero left factor");
  }

  double lsign[2] = {1.0, 1.0};
  double rsign[2] = {1.0, 1.0};

  // Pivot row fixes the right-factor signs; the remaining left sign follows
  // from the largest usable amplitude of the other row.
  for (int k = 0; k < 2; ++k) {
    if (rmag[k] > tol) rsign[k] = sign_of(rows[pivot][k]);
  }
  const int other = 1 - pivot;
  if (lmag[other] > tol) {
    int kbest = -1;
    double best = tol;
    for (int k = 0; k < 2; ++k) {
      const double mag = std::abs(rows[other][k]);
      if (rmag[k] > tol && mag > best) {
        best = mag;
        kbest = k;
      }
    }
    if (kbest < 0) {
      throw SignAssignmentFailure(
          "factorize: cannot infer sign of second left component");
    }
    lsign[other] = sign_of(rows[other][kbest]) * rsign[kbest];
  }

  const Ket2 left{lsign[0] * lmag[0], lsign[1] * lmag[1]};
  const Ket2 right{rsign[0] * rmag[0], rsign[1] * rmag[1]};

  const Ket4 rebuilt = tensor(left, right);
  const double err = std::max(
      {std::abs(rebuilt.c11 - state.c11), std::abs(rebuilt.c12 - state.c12),
       std::abs(rebuilt.c21 - state.c21), std::abs(rebuilt.c22 - state.c22)});
  if (err > std::max(tol, 1e-12)) {
    throw SignAssignmentFailure(
        "factorize: no sign pattern reproduces the state, residual " +
        std::to_string(err));
  }
  return {left, right};
}

}  // namespace bellbox
