#pragma once

#include <cstdint>
#include <vector>

namespace qsdc {

// Deterministic 64-bit random stream (splitmix64). Every random decision in
// the simulator flows through this type so that a run is bit-reproducible
// from its seed across platforms, compilers, and thread counts. The standard
// <random> distributions are implementation-defined and would break that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    ++draws_;
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // One draw, true with probability p.
  bool bernoulli(double p) { return uniform() < p; }

  // Fair bit.
  std::uint8_t coin() { return static_cast<std::uint8_t>(next_u64() >> 63); }

  // Uniform integer in [0, bound). Lemire multiply-shift with rejection, so
  // the result is exactly uniform. bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Number of next_u64 calls so far. Lets tests assert that deterministic
  // outcomes consume no randomness.
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

// Fixed seed-derivation hash (splitmix64 finalizer over base + (index+1)*gamma).
// Child streams for trial i, or for the per-party streams inside a run, are
// derived with this; independence is by construction, which is what makes
// trial-level parallelism safe.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Fisher-Yates shuffle driven by an explicit stream.
template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace qsdc
