#pragma once

#include <array>
#include <cstdint>

#include "qsdc/rng.hpp"

namespace qsdc {

// The four Bell states of an EPR pair. Global phase is never represented:
// states equal up to phase map to the same label, which keeps the algebra
// exact and finite.
enum class BellLabel : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

// The four local encoding operations of the dense-coding step:
//   U0 = |0><0| + |1><1|   (identity)
//   U1 = |0><0| - |1><1|
//   U2 = |0><1| + |1><0|
//   U3 = |0><1| - |1><0|
// Each carries two classical bits and is self-inverse up to phase.
enum class EncodeOp : std::uint8_t { U0, U1, U2, U3 };

// Which qubit of the pair an operation acts on. The sender keeps the home
// qubit; only the travel qubit crosses the channel.
enum class Side : std::uint8_t { Home, Travel };

inline constexpr std::array<BellLabel, 4> kBellLabels = {
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
    BellLabel::PsiMinus};

inline constexpr std::array<EncodeOp, 4> kEncodeOps = {
    EncodeOp::U0, EncodeOp::U1, EncodeOp::U2, EncodeOp::U3};

// Every pair in the protocol starts in the singlet.
inline constexpr BellLabel kInitialState = BellLabel::PsiMinus;

const char* to_string(BellLabel label);
const char* to_string(EncodeOp op);

// (parity, phase) coordinates of a Bell label: parity 1 for the Psi states
// (anticorrelated Z outcomes), phase 1 for the minus states.
struct LabelBits {
  std::uint8_t parity;
  std::uint8_t phase;
};

constexpr LabelBits label_bits(BellLabel label) {
  const auto v = static_cast<std::uint8_t>(label);
  return LabelBits{static_cast<std::uint8_t>(v >> 1),
                   static_cast<std::uint8_t>(v & 1)};
}

constexpr BellLabel label_from_bits(std::uint8_t parity, std::uint8_t phase) {
  return static_cast<BellLabel>(((parity & 1) << 1) | (phase & 1));
}

// Pauli content of an op: whether it flips the Bell parity (X component) and
// whether it flips the Bell phase (Z component).
constexpr std::uint8_t op_flips_parity(EncodeOp op) {
  return static_cast<std::uint8_t>(static_cast<std::uint8_t>(op) >> 1);
}
constexpr std::uint8_t op_flips_phase(EncodeOp op) {
  return static_cast<std::uint8_t>(static_cast<std::uint8_t>(op) & 1);
}
constexpr EncodeOp op_from_flips(std::uint8_t parity_flip,
                                 std::uint8_t phase_flip) {
  return static_cast<EncodeOp>(((parity_flip & 1) << 1) | (phase_flip & 1));
}

// Two-bit classical meaning of each op. The assignment is a protocol constant
// agreed by the users; it is configurable so nothing downstream bakes in one
// choice. The default maps U0->00, U1->11, U2->10, U3->01.
class OpBitMapping {
 public:
  static OpBitMapping standard();

  // codes[i] is the 2-bit value (0..3) carried by U_i. Throws ConfigError
  // unless the four codes are a bijection on {0,1,2,3}.
  static OpBitMapping from_codes(const std::array<std::uint8_t, 4>& codes);

  std::uint8_t bits_for(EncodeOp op) const {
    return codes_[static_cast<std::size_t>(op)];
  }
  EncodeOp op_for(std::uint8_t bits) const {
    return ops_[bits & 3];
  }
  const std::array<std::uint8_t, 4>& codes() const { return codes_; }

  bool operator==(const OpBitMapping&) const = default;

 private:
  std::array<std::uint8_t, 4> codes_{};  // indexed by op
  std::array<EncodeOp, 4> ops_{};        // indexed by 2-bit value
};

// Joint state of one EPR pair. Pure(label) until a computational-basis
// measurement of one photon collapses it to a definite |home,travel> product;
// those products are the only mixtures any in-scope adversary can cause.
class PairState {
 public:
  static PairState pure(BellLabel label) {
    PairState s;
    s.pure_ = true;
    s.label_ = label;
    return s;
  }
  static PairState collapsed(std::uint8_t home_bit, std::uint8_t travel_bit) {
    PairState s;
    s.pure_ = false;
    s.home_bit_ = home_bit & 1;
    s.travel_bit_ = travel_bit & 1;
    return s;
  }

  bool is_pure() const { return pure_; }
  BellLabel label() const { return label_; }           // valid when pure
  std::uint8_t home_bit() const { return home_bit_; }  // valid when collapsed
  std::uint8_t travel_bit() const { return travel_bit_; }

  bool operator==(const PairState&) const = default;

 private:
  bool pure_ = true;
  BellLabel label_ = kInitialState;
  std::uint8_t home_bit_ = 0;
  std::uint8_t travel_bit_ = 0;
};

// Bell label after applying `op` to one qubit of `state`, phase discarded.
// The label map is identical for both sides; only the dropped phase differs.
BellLabel bell_apply(BellLabel state, EncodeOp op, Side side);

// The unique op with bell_apply(initial, op, Travel) == measured. Total: the
// four ops map a fixed initial label onto all four Bell labels.
EncodeOp decode_op(BellLabel initial, BellLabel measured);

// `op` applied to one qubit of an arbitrary pair state: label algebra for
// pure states, a possible bit flip for collapsed products.
PairState pair_apply(const PairState& state, EncodeOp op, Side side);

// Bell-state measurement. Pure states measure to themselves with no
// randomness consumed; a collapsed |h,t> lands in the parity-matching label
// pair with a fair phase coin.
BellLabel bell_measure(const PairState& state, Rng& rng);

struct ZMeasurement {
  std::uint8_t bit;  // travel-qubit outcome
  PairState state;   // post-measurement state
};

// Computational-basis measurement of the travel qubit. On a pure Bell state
// the outcome is a fair coin (all four have maximally mixed marginals) and
// the home bit is forced by the label's correlations; on an already collapsed
// pair the stored bit is returned unchanged and no randomness is consumed.
ZMeasurement z_measure_travel(const PairState& state, Rng& rng);

}  // namespace qsdc
