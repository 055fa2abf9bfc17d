#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "obhs/symbol.hpp"

namespace obhs {

struct AudioMeta {
  std::uint32_t sample_rate = 44100;
  std::uint16_t channels = 1;
  std::uint16_t bits_per_sample = 16;

  friend bool operator==(const AudioMeta&, const AudioMeta&) = default;
};

struct WavData {
  AudioMeta meta;
  std::vector<Symbol> samples;  // interleaved, file order
};

inline constexpr std::size_t kWavHeaderBytes = 44;

// Accepts RIFF/WAVE with a 16-bit PCM (tag 1) fmt chunk; chunks may appear
// in any order and unknown ones are skipped. Anything else throws
// kUnsupportedFormat.
WavData read_wav(std::span<const std::uint8_t> bytes);

// Appends the canonical 44-byte-header layout (RIFF, 16-byte fmt, data) and
// returns the number of bytes appended.
std::size_t write_wav(const AudioMeta& meta, std::span<const Symbol> samples,
                      std::vector<std::uint8_t>& sink);

constexpr std::uint64_t wav_file_bytes(std::uint64_t sample_count) {
  return kWavHeaderBytes + 2 * sample_count;
}

}  // namespace obhs
