#pragma once

#include <cstdint>

namespace qsdc {

// Identifier of an EPR pair in a run's registry.
using PairId = std::uint32_t;

// Original position of a travel photon in Alice's outgoing sequence.
using SlotIndex = std::uint32_t;

// Position in the (permuted) sequence Bob returns to Alice.
using Position = std::uint32_t;

enum class ChannelDirection : std::uint8_t { AliceToBob, BobToAlice };

const char* to_string(ChannelDirection direction);

}  // namespace qsdc
