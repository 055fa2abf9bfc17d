#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "obhs/bit_io.hpp"
#include "obhs/block_codec.hpp"

namespace obhs {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'O', 'B', 'H', 'S'};
inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderBytes = 24;
inline constexpr std::uint32_t kMinBlockSize = 256;
inline constexpr std::uint32_t kMaxBlockSize = 65536;
inline constexpr std::uint32_t kDefaultBlockSize = 4096;

// Stream header layout (little-endian):
//   0  magic "OBHS"      4  version (1)   5  flags (0)   6  channels
//   7  reserved (0)      8  sample_rate   12 block_size  16 total_samples (u64)
struct StreamHeader {
  std::uint8_t channels = 1;
  std::uint32_t sample_rate = 44100;
  std::uint32_t block_size = kDefaultBlockSize;
  std::uint64_t total_samples = 0;  // interleaved count across channels

  std::uint64_t block_count() const noexcept {
    return (total_samples + block_size - 1) / block_size;
  }

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

std::array<std::uint8_t, kHeaderBytes> encode_header(const StreamHeader& header);
// Throws kUnsupportedFormat for bad magic/version/flags, kCorruptStream for
// out-of-range fields or a short buffer.
StreamHeader decode_header(std::span<const std::uint8_t> bytes);

// Appends one byte-aligned block record to `sink` and returns its size in
// bytes. The sink must be byte-aligned.
std::size_t serialize_block(const CompressedBlock& block, BitWriter& sink);
inline std::size_t serialize_block(const BlockEncodeResult& result, BitWriter& sink) {
  return serialize_block(result.block, sink);
}

// Reads one record, consuming its padding. Throws kCorruptStream (with the
// byte offset) on any malformed field.
CompressedBlock parse_block(BitReader& source, std::uint32_t block_size);

// Appends header + records to `sink`; returns the number of bytes appended.
// Throws kInvalidInput if the blocks do not tile total_samples.
std::size_t write_stream(const StreamHeader& header, std::span<const BlockEncodeResult> blocks,
                         std::vector<std::uint8_t>& sink);

// Upper bound on a stream's size: header + 3 bytes per block + 2 per sample.
constexpr std::uint64_t max_stream_bytes(std::uint64_t total_samples, std::uint32_t block_size) {
  return kHeaderBytes + 3 * ((total_samples + block_size - 1) / block_size) + 2 * total_samples;
}

// Lazily parses the records of a stream held in memory.
class StreamReader {
 public:
  explicit StreamReader(std::span<const std::uint8_t> bytes);

  const StreamHeader& header() const noexcept { return header_; }

  // Next block, or nullopt once all ceil(total/block_size) blocks are read.
  // At the end, trailing bytes are reported as corruption.
  std::optional<CompressedBlock> next();

  std::uint64_t blocks_read() const noexcept { return index_; }

 private:
  std::span<const std::uint8_t> bytes_;
  StreamHeader header_;
  BitReader reader_;
  std::uint64_t index_ = 0;
  std::uint64_t samples_read_ = 0;
};

inline StreamReader read_stream(std::span<const std::uint8_t> bytes) { return StreamReader(bytes); }

}  // namespace obhs
