#include "qsdc/bell.hpp"

#include "qsdc/errors.hpp"

namespace qsdc {

const char* to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus:
      return "Phi+";
    case BellLabel::PhiMinus:
      return "Phi-";
    case BellLabel::PsiPlus:
      return "Psi+";
    case BellLabel::PsiMinus:
      return "Psi-";
  }
  return "?";
}

const char* to_string(EncodeOp op) {
  switch (op) {
    case EncodeOp::U0:
      return "U0";
    case EncodeOp::U1:
      return "U1";
    case EncodeOp::U2:
      return "U2";
    case EncodeOp::U3:
      return "U3";
  }
  return "?";
}

OpBitMapping OpBitMapping::standard() {
  return from_codes({0b00, 0b11, 0b10, 0b01});
}

OpBitMapping OpBitMapping::from_codes(
    const std::array<std::uint8_t, 4>& codes) {
  std::array<bool, 4> seen{};
  for (std::uint8_t code : codes) {
    if (code > 3) {
      throw ConfigError("bit_mapping: code out of range (must be 0..3)");
    }
    if (seen[code]) {
      throw ConfigError("bit_mapping: codes must be a bijection on {00,01,10,11}");
    }
    seen[code] = true;
  }
  OpBitMapping m;
  m.codes_ = codes;
  for (std::size_t i = 0; i < 4; ++i) {
    m.ops_[codes[i]] = static_cast<EncodeOp>(i);
  }
  return m;
}

BellLabel bell_apply(BellLabel state, EncodeOp op, Side /*side*/) {
  const LabelBits b = label_bits(state);
  return label_from_bits(b.parity ^ op_flips_parity(op),
                         b.phase ^ op_flips_phase(op));
}

EncodeOp decode_op(BellLabel initial, BellLabel measured) {
  const LabelBits i = label_bits(initial);
  const LabelBits m = label_bits(measured);
  return op_from_flips(i.parity ^ m.parity, i.phase ^ m.phase);
}

PairState pair_apply(const PairState& state, EncodeOp op, Side side) {
  if (state.is_pure()) {
    return PairState::pure(bell_apply(state.label(), op, side));
  }
  // On a definite |h,t> product the Z component only contributes phase; the
  // X component flips the acted-on bit.
  const std::uint8_t flip = op_flips_parity(op);
  if (side == Side::Travel) {
    return PairState::collapsed(state.home_bit(), state.travel_bit() ^ flip);
  }
  return PairState::collapsed(state.home_bit() ^ flip, state.travel_bit());
}

BellLabel bell_measure(const PairState& state, Rng& rng) {
  if (state.is_pure()) {
    return state.label();
  }
  // |h,t> decomposes over the two labels of matching parity with equal
  // weight; the phase bit is a fair coin.
  const std::uint8_t parity = state.home_bit() ^ state.travel_bit();
  return label_from_bits(parity, rng.coin());
}

ZMeasurement z_measure_travel(const PairState& state, Rng& rng) {
  if (!state.is_pure()) {
    return ZMeasurement{state.travel_bit(), state};
  }
  const std::uint8_t travel = rng.coin();
  const std::uint8_t home = travel ^ label_bits(state.label()).parity;
  return ZMeasurement{travel, PairState::collapsed(home, travel)};
}

}  // namespace qsdc
