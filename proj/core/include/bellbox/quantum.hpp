#pragma once

#include <array>

#include "bellbox/events.hpp"
#include "bellbox/statevec.hpp"

namespace bellbox {

/// Observation side: A is the left arm (carries the source amplitudes),
/// B the right arm.
enum class Side { A, B };

/// Photon polarization emitted by the primary source. h maps to "lamp on".
enum class Polarization { h, v };

/// Which anti-correlated emission the branch describes: HV is h on the left
/// and v on the right, VH the reverse.
enum class BranchLabel { HV, VH };

/// Sign convention for the amplitude on |off,on>. Phenomenological takes
/// c21 = +c12 (square roots of measured probabilities); Interaction takes
/// c21 = -c12, which is what the local rotation picture produces. Squared
/// amplitudes, and hence every observable probability, agree under both.
enum class SignConvention { Phenomenological, Interaction };

/// Plane rotation ((cos, -sin), (sin, cos)).
struct RotationMatrix {
  double m00 = 1.0, m01 = 0.0;
  double m10 = 0.0, m11 = 1.0;

  Ket2 apply(const Ket2& v) const {
    return Ket2{m00 * v.a1 + m01 * v.a2, m10 * v.a1 + m11 * v.a2};
  }
};

RotationMatrix rotation(double theta);

/// Local post-interaction state of one side for one incoming polarization,
/// with the polarizer at angle theta. Side-A states carry the source
/// amplitude +1/sqrt(2) (h) or -1/sqrt(2) (v); side-B states are unit norm.
Ket2 local_state(Side side, Polarization polarization, double theta);

/// Product state of the two local post-interaction states for one emission
/// branch. Squared norm 1/2, separability defect 0.
Ket4 branch_state(BranchLabel branch, double alpha, double beta);

/// The Bell-box state: c11 = c22 = sin(a-b)/sqrt(2), c12 = cos(a-b)/sqrt(2),
/// c21 = +-c12 by convention. Normalized to 1.
Ket4 qbb_state(double alpha, double beta,
               SignConvention convention = SignConvention::Interaction);

/// Closed-form event probabilities: w(y,y) = w(n,n) = sin^2(a-b)/2,
/// w(y,n) = w(n,y) = cos^2(a-b)/2.
EventProbabilities quantum_probabilities(double alpha, double beta);

/// Squared components of a product-space state read as event probabilities.
EventProbabilities born_probabilities(const Ket4& state);

/// 4x2 transformation from the primary two-amplitude state to the four
/// event amplitudes; rows ordered (yy, yn, ny, nn). Satisfies T^t T = I.
struct BasisTransform {
  std::array<std::array<double, 2>, 4> t{};

  std::array<double, 4> column(int j) const {
    return {t[0][j], t[1][j], t[2][j], t[3][j]};
  }
};

BasisTransform basis_transform_matrix(double alpha, double beta);

/// Applies the basis transform to the primary amplitudes (1/sqrt(2),
/// -1/sqrt(2)). Equals qbb_state under the Interaction convention.
Ket4 transform_primary(double alpha, double beta);

}  // namespace bellbox
