#include "qsdc/reference_model.hpp"

#include <cmath>

namespace qsdc::ref {

namespace {

constexpr double kRoot2Inv = 0.70710678118654752440;
constexpr double kTol = 1e-12;

Amplitude inner(const Vec4& a, const Vec4& b) {
  Amplitude sum{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    sum += std::conj(a[i]) * b[i];
  }
  return sum;
}

}  // namespace

Vec4 bell_vector(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus:
      return Vec4{{{kRoot2Inv, 0}, {0, 0}, {0, 0}, {kRoot2Inv, 0}}};
    case BellLabel::PhiMinus:
      return Vec4{{{kRoot2Inv, 0}, {0, 0}, {0, 0}, {-kRoot2Inv, 0}}};
    case BellLabel::PsiPlus:
      return Vec4{{{0, 0}, {kRoot2Inv, 0}, {kRoot2Inv, 0}, {0, 0}}};
    case BellLabel::PsiMinus:
      return Vec4{{{0, 0}, {kRoot2Inv, 0}, {-kRoot2Inv, 0}, {0, 0}}};
  }
  return {};
}

Mat2 op_matrix(EncodeOp op) {
  switch (op) {
    case EncodeOp::U0:  // |0><0| + |1><1|
      return Mat2{{{Amplitude{1, 0}, Amplitude{0, 0}},
                   {Amplitude{0, 0}, Amplitude{1, 0}}}};
    case EncodeOp::U1:  // |0><0| - |1><1|
      return Mat2{{{Amplitude{1, 0}, Amplitude{0, 0}},
                   {Amplitude{0, 0}, Amplitude{-1, 0}}}};
    case EncodeOp::U2:  // |0><1| + |1><0|
      return Mat2{{{Amplitude{0, 0}, Amplitude{1, 0}},
                   {Amplitude{1, 0}, Amplitude{0, 0}}}};
    case EncodeOp::U3:  // |0><1| - |1><0|
      return Mat2{{{Amplitude{0, 0}, Amplitude{1, 0}},
                   {Amplitude{-1, 0}, Amplitude{0, 0}}}};
  }
  return {};
}

Vec4 product_vector(int home_bit, int travel_bit) {
  Vec4 v{};
  v[static_cast<std::size_t>(((home_bit & 1) << 1) | (travel_bit & 1))] =
      Amplitude{1, 0};
  return v;
}

Vec4 apply_one_sided(const Vec4& state, EncodeOp op, Side side) {
  const Mat2 u = op_matrix(op);
  Vec4 out{};
  for (int h = 0; h < 2; ++h) {
    for (int t = 0; t < 2; ++t) {
      const std::size_t row = static_cast<std::size_t>((h << 1) | t);
      for (int k = 0; k < 2; ++k) {
        if (side == Side::Home) {
          // (U (x) I)[h t, k t] = U[h, k]
          out[row] += u[h][k] * state[static_cast<std::size_t>((k << 1) | t)];
        } else {
          // (I (x) U)[h t, h k] = U[t, k]
          out[row] += u[t][k] * state[static_cast<std::size_t>((h << 1) | k)];
        }
      }
    }
  }
  return out;
}

std::optional<BellLabel> match_bell(const Vec4& state) {
  for (BellLabel label : kBellLabels) {
    const Amplitude overlap = inner(bell_vector(label), state);
    if (std::abs(std::abs(overlap) - 1.0) < kTol) {
      return label;
    }
  }
  return std::nullopt;
}

BellLabel bell_apply(BellLabel state, EncodeOp op, Side side) {
  const auto matched = match_bell(apply_one_sided(bell_vector(state), op, side));
  // The four ops are single-qubit Paulis up to phase, so the image of a Bell
  // state is always another Bell state.
  return *matched;
}

std::array<double, 4> bell_probabilities(const Vec4& state) {
  std::array<double, 4> probs{};
  for (std::size_t i = 0; i < 4; ++i) {
    const double a = std::abs(inner(bell_vector(kBellLabels[i]), state));
    probs[i] = a * a;
  }
  return probs;
}

TravelProjection project_travel(BellLabel label, int bit) {
  const Vec4 v = bell_vector(label);
  double prob = 0.0;
  int home = 0;
  for (int h = 0; h < 2; ++h) {
    const double a =
        std::abs(v[static_cast<std::size_t>((h << 1) | (bit & 1))]);
    if (a * a > kTol) {
      prob += a * a;
      home = h;
    }
  }
  return TravelProjection{prob, home};
}

}  // namespace qsdc::ref
