#include "bellbox/quantum.hpp"

#include <cmath>

namespace bellbox {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

RotationMatrix rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return RotationMatrix{c, -s, s, c};
}

Ket2 local_state(Side side, Polarization polarization, double theta) {
  const Ket2 basis = polarization == Polarization::h ? Ket2{1.0, 0.0}
                                                     : Ket2{0.0, 1.0};
  Ket2 rotated = rotation(theta).apply(basis);
  if (side == Side::A) {
    // Source amplitudes are attached to the left arm.
    const double prefactor =
        polarization == Polarization::h ? kInvSqrt2 : -kInvSqrt2;
    rotated.a1 *= prefactor;
    rotated.a2 *= prefactor;
  }
  return rotated;
}

Ket4 branch_state(BranchLabel branch, double alpha, double beta) {
  if (branch == BranchLabel::HV) {
    return tensor(local_state(Side::A, Polarization::h, alpha),
                  local_state(Side::B, Polarization::v, beta));
  }
  return tensor(local_state(Side::A, Polarization::v, alpha),
                local_state(Side::B, Polarization::h, beta));
}

Ket4 qbb_state(double alpha, double beta, SignConvention convention) {
  const double s = kInvSqrt2 * std::sin(alpha - beta);
  const double c = kInvSqrt2 * std::cos(alpha - beta);
  const double c21 = convention == SignConvention::Phenomenological ? c : -c;
  return Ket4{s, c, c21, s};
}

EventProbabilities quantum_probabilities(double alpha, double beta) {
  const double s = std::sin(alpha - beta);
  const double c = std::cos(alpha - beta);
  const double same = 0.5 * s * s;
  const double diff = 0.5 * c * c;
  return EventProbabilities{same, diff, diff, same};
}

EventProbabilities born_probabilities(const Ket4& state) {
  return EventProbabilities{state.c11 * state.c11, state.c12 * state.c12,
                            state.c21 * state.c21, state.c22 * state.c22};
}

BasisTransform basis_transform_matrix(double alpha, double beta) {
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  BasisTransform out;
  out.t[0] = {-ca * sb, -sa * cb};
  out.t[1] = {ca * cb, -sa * sb};
  out.t[2] = {-sa * sb, ca * cb};
  out.t[3] = {sa * cb, ca * sb};
  return out;
}

Ket4 transform_primary(double alpha, double beta) {
  const BasisTransform m = basis_transform_matrix(alpha, beta);
  const double p1 = kInvSqrt2;
  const double p2 = -kInvSqrt2;
  return Ket4{m.t[0][0] * p1 + m.t[0][1] * p2, m.t[1][0] * p1 + m.t[1][1] * p2,
              m.t[2][0] * p1 + m.t[2][1] * p2, m.t[3][0] * p1 + m.t[3][1] * p2};
}

}  // namespace bellbox
