#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "obhs/block_codec.hpp"
#include "obhs/container.hpp"

namespace obhs {

struct EncodeOptions {
  std::uint32_t block_size = kDefaultBlockSize;
  // Encode blocks on all hardware threads. Output is bit-identical.
  bool parallel = false;
};

// Partitions `samples` into block_size windows (the last may be short) and
// encodes each independently.
std::vector<BlockEncodeResult> encode_blocks(std::span<const Symbol> samples,
                                             const EncodeOptions& options = {});

// Whole-stream encode: header + block records.
std::vector<std::uint8_t> encode_stream(std::span<const Symbol> samples, std::uint8_t channels,
                                        std::uint32_t sample_rate,
                                        const EncodeOptions& options = {});

struct DecodedStream {
  StreamHeader header;
  std::vector<Symbol> samples;
};

// Throws kUnsupportedFormat / kCorruptStream with block index and offset.
DecodedStream decode_stream(std::span<const std::uint8_t> bytes);

}  // namespace obhs
