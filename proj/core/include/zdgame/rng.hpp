#pragma once

#include <cstdint>
#include <random>

namespace zdgame {

// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw. Used
// instead of std::uniform_real_distribution so that streams are identical
// across standard library implementations.
inline double canonical_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace zdgame
