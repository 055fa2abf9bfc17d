#pragma once

#include <bit>
#include <cstdint>

namespace obhs {

// A coded symbol is one 16-bit PCM sample, its two's-complement bit pattern
// read as unsigned.
using Symbol = std::uint16_t;

inline constexpr std::size_t kAlphabetSize = 1u << 16;
inline constexpr std::size_t kMaxBlockSamples = 1u << 16;

constexpr Symbol to_symbol(std::int16_t pcm) noexcept { return std::bit_cast<Symbol>(pcm); }
constexpr std::int16_t to_pcm(Symbol symbol) noexcept { return std::bit_cast<std::int16_t>(symbol); }

}  // namespace obhs
