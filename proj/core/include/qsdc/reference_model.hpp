#pragma once

#include <array>
#include <complex>
#include <optional>

#include "qsdc/bell.hpp"

// Brute-force two-qubit model used to verify the symbolic Bell algebra. It
// works on explicit 4-component state vectors and 2x2 operator matrices and
// deliberately shares no code with the label-based implementation, so the two
// routes can be compared entry by entry. Linked by the test suites and the
// CLI selftest.
namespace qsdc::ref {

using Amplitude = std::complex<double>;
// Basis order |home,travel>: |00>, |01>, |10>, |11>.
using Vec4 = std::array<Amplitude, 4>;
using Mat2 = std::array<std::array<Amplitude, 2>, 2>;

// Normalized state vector of a Bell label.
Vec4 bell_vector(BellLabel label);

// <i|U|j> entries of the encoding operation, straight from its definition.
Mat2 op_matrix(EncodeOp op);

// |home_bit,travel_bit> computational product state.
Vec4 product_vector(int home_bit, int travel_bit);

// U (x) I or I (x) U applied to the state vector.
Vec4 apply_one_sided(const Vec4& state, EncodeOp op, Side side);

// The Bell label whose vector equals `state` up to a global phase, if any.
std::optional<BellLabel> match_bell(const Vec4& state);

// Matrix route for the label map: build the vector, apply the operator,
// match phase-insensitively.
BellLabel bell_apply(BellLabel state, EncodeOp op, Side side);

// |<Bell_k|state>|^2 for the four labels, in kBellLabels order.
std::array<double, 4> bell_probabilities(const Vec4& state);

struct TravelProjection {
  double probability;  // of observing `bit` on the travel qubit
  int home_bit;        // definite home outcome conditioned on it
};

// Projection of a pure Bell state onto travel-qubit |bit>.
TravelProjection project_travel(BellLabel label, int bit);

}  // namespace qsdc::ref
