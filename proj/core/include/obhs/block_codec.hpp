#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "obhs/bit_io.hpp"
#include "obhs/huffman.hpp"
#include "obhs/symbol.hpp"

namespace obhs {

enum class BlockMode : std::uint8_t { kRaw = 0, kHuffman = 1 };

// Serialized field widths of a block record.
inline constexpr unsigned kModeBits = 1;
inline constexpr unsigned kCountBits = 16;
inline constexpr unsigned kSymbolBits = 16;
inline constexpr unsigned kLengthBits = 5;
inline constexpr unsigned kTableEntryBits = kSymbolBits + kLengthBits;

struct CompressedBlock {
  BlockMode mode = BlockMode::kRaw;
  std::uint32_t sample_count = 0;
  // (symbol, length) in increasing symbol order; empty for raw blocks.
  std::vector<SymbolLength> table;
  // Huffman: codewords packed MSB-first. Raw: 16-bit little-endian samples.
  std::vector<std::uint8_t> payload;
  std::uint64_t payload_bits = 0;

  friend bool operator==(const CompressedBlock&, const CompressedBlock&) = default;
};

struct BlockEncodeResult {
  CompressedBlock block;
  // Unpadded record sizes for each mode; Huffman is chosen iff smaller.
  std::uint64_t huffman_bits = 0;
  std::uint64_t raw_bits = 0;
};

// Record size in bits, before byte padding.
constexpr std::uint64_t huffman_record_bits(std::uint64_t distinct, std::uint64_t payload_bits) {
  return kModeBits + 2 * kCountBits + kTableEntryBits * distinct + payload_bits;
}
constexpr std::uint64_t raw_record_bits(std::uint64_t sample_count) {
  return kModeBits + kCountBits + 16 * sample_count;
}

// Canonical decoder: per-length first code and first index into the
// (length, symbol)-ordered symbol list. No tree is materialized.
class DecodeTable {
 public:
  // Throws kCorruptStream on non-increasing symbols or a Kraft violation.
  explicit DecodeTable(std::span<const SymbolLength> table);

  // Reads one codeword. Throws kCorruptStream if the bits match no code.
  Symbol decode(BitReader& reader) const;

  std::span<const Symbol> sorted_symbols() const noexcept { return sorted_symbols_; }
  unsigned max_length() const noexcept { return max_length_; }

 private:
  std::array<std::uint32_t, kMaxCodeLength + 1> first_code_{};
  std::array<std::uint32_t, kMaxCodeLength + 1> first_index_{};
  std::array<std::uint32_t, kMaxCodeLength + 1> count_{};
  std::vector<Symbol> sorted_symbols_;
  unsigned max_length_ = 0;
};

inline DecodeTable build_decode_table(std::span<const SymbolLength> table) {
  return DecodeTable(table);
}

// Chooses Huffman or raw by comparing full record sizes (mode bit, counts,
// table and payload). Throws kInvalidInput for an empty or oversized block.
BlockEncodeResult encode_block(std::span<const Symbol> samples);

// Throws kCorruptStream when the payload runs out, holds an unmatched code,
// or does not end exactly where the last sample does.
std::vector<Symbol> decode_block(const CompressedBlock& block);

// Sum of count * length. Throws kInternal if the symbol sets differ.
std::uint64_t estimate_encoded_bits(const FrequencyTable& freq, const CodeLengthTable& lengths);

}  // namespace obhs
