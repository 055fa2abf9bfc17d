#include "obhs/container.hpp"

#include <algorithm>
#include <string>

#include "obhs/error.hpp"

namespace obhs {

namespace {

void put_le(std::uint8_t* out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out[i] = static_cast<std::uint8_t>(value >> (8 * i));
}

std::uint64_t get_le(const std::uint8_t* in, int bytes) {
  std::uint64_t value = 0;
  for (int i = bytes - 1; i >= 0; --i) value = (value << 8) | in[i];
  return value;
}

[[noreturn]] void corrupt(const BitReader& at, std::string message) {
  throw Error(ErrorKind::kCorruptStream, std::move(message), at.byte_offset());
}

}  // namespace

std::array<std::uint8_t, kHeaderBytes> encode_header(const StreamHeader& header) {
  std::array<std::uint8_t, kHeaderBytes> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  out[4] = kFormatVersion;
  out[5] = 0;
  out[6] = header.channels;
  out[7] = 0;
  put_le(&out[8], header.sample_rate, 4);
  put_le(&out[12], header.block_size, 4);
  put_le(&out[16], header.total_samples, 8);
  return out;
}

StreamHeader decode_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorKind::kUnsupportedFormat, "not an OBHS stream (bad magic)", 0);
  }
  if (bytes.size() < kHeaderBytes) {
    throw Error(ErrorKind::kCorruptStream, "stream header is truncated", bytes.size());
  }
  if (bytes[4] != kFormatVersion) {
    throw Error(ErrorKind::kUnsupportedFormat,
                "unsupported format version " + std::to_string(bytes[4]), 4);
  }
  if (bytes[5] != 0) throw Error(ErrorKind::kUnsupportedFormat, "unknown header flags", 5);
  if (bytes[7] != 0) throw Error(ErrorKind::kCorruptStream, "reserved header byte is not zero", 7);

  StreamHeader h;
  h.channels = bytes[6];
  h.sample_rate = static_cast<std::uint32_t>(get_le(&bytes[8], 4));
  h.block_size = static_cast<std::uint32_t>(get_le(&bytes[12], 4));
  h.total_samples = get_le(&bytes[16], 8);
  if (h.channels == 0) throw Error(ErrorKind::kCorruptStream, "channel count is zero", 6);
  if (h.block_size < kMinBlockSize || h.block_size > kMaxBlockSize) {
    throw Error(ErrorKind::kCorruptStream,
                "block size " + std::to_string(h.block_size) + " out of range", 12);
  }
  return h;
}

std::size_t serialize_block(const CompressedBlock& block, BitWriter& sink) {
  if (!sink.byte_aligned()) fail(ErrorKind::kInvalidInput, "block record must start byte-aligned");
  if (block.sample_count == 0 || block.sample_count > kMaxBlockSamples) {
    fail(ErrorKind::kInvalidInput, "block sample count out of range");
  }
  const std::uint64_t start = sink.bit_count();

  sink.write_bit(block.mode == BlockMode::kHuffman);
  sink.write_bits(block.sample_count - 1, kCountBits);
  if (block.mode == BlockMode::kHuffman) {
    if (block.table.empty() || block.table.size() > kAlphabetSize) {
      fail(ErrorKind::kInvalidInput, "Huffman block has an invalid table size");
    }
    sink.write_bits(static_cast<std::uint32_t>(block.table.size() - 1), kCountBits);
    for (const auto& e : block.table) {
      sink.write_bits(e.symbol, kSymbolBits);
      sink.write_bits(e.length - 1u, kLengthBits);
    }
    sink.write_packed(block.payload, block.payload_bits);
  } else {
    if (block.payload.size() != std::size_t{2} * block.sample_count) {
      fail(ErrorKind::kInvalidInput, "raw payload size does not match sample count");
    }
    for (std::uint8_t byte : block.payload) sink.write_bits(byte, 8);
  }
  sink.align();
  return static_cast<std::size_t>((sink.bit_count() - start) / 8);
}

CompressedBlock parse_block(BitReader& source, std::uint32_t block_size) {
  if (!source.byte_aligned()) fail(ErrorKind::kInvalidInput, "block record must start byte-aligned");
  const BitReader record_start = source;

  CompressedBlock block;
  block.mode = source.read_bit() ? BlockMode::kHuffman : BlockMode::kRaw;
  block.sample_count = source.read_bits(kCountBits) + 1;
  if (block.sample_count > block_size) {
    corrupt(record_start, "block holds " + std::to_string(block.sample_count) +
                              " samples, more than the block size " + std::to_string(block_size));
  }

  if (block.mode == BlockMode::kHuffman) {
    const std::uint32_t distinct = source.read_bits(kCountBits) + 1;
    if (distinct > block.sample_count) {
      corrupt(record_start, "code table has more symbols than the block has samples");
    }
    block.table.reserve(distinct);
    for (std::uint32_t i = 0; i < distinct; ++i) {
      const auto symbol = static_cast<Symbol>(source.read_bits(kSymbolBits));
      const auto length = static_cast<std::uint8_t>(source.read_bits(kLengthBits) + 1);
      if (!block.table.empty() && block.table.back().symbol >= symbol) {
        corrupt(source, "code table symbols are not strictly increasing");
      }
      block.table.push_back({symbol, length});
    }
    if (!kraft_complete(block.table)) corrupt(source, "code lengths violate Kraft equality");

    // The payload length is implicit: walk the codewords to find its end,
    // then copy exactly those bits.
    const DecodeTable table(block.table);
    const BitReader payload_start = source;
    for (std::uint32_t i = 0; i < block.sample_count; ++i) table.decode(source);
    block.payload_bits = source.bit_position() - payload_start.bit_position();

    BitReader copy = payload_start;
    BitWriter payload;
    for (std::uint64_t left = block.payload_bits; left > 0;) {
      const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(left, 32));
      payload.write_bits(copy.read_bits(n), n);
      left -= n;
    }
    block.payload = payload.take();
  } else {
    block.payload.resize(std::size_t{2} * block.sample_count);
    for (auto& byte : block.payload) byte = static_cast<std::uint8_t>(source.read_bits(8));
    block.payload_bits = std::uint64_t{16} * block.sample_count;
  }

  if (source.align() != 0) corrupt(source, "nonzero padding after block record");
  return block;
}

std::size_t write_stream(const StreamHeader& header, std::span<const BlockEncodeResult> blocks,
                         std::vector<std::uint8_t>& sink) {
  if (header.channels == 0) fail(ErrorKind::kInvalidInput, "channel count must be at least 1");
  if (header.block_size < kMinBlockSize || header.block_size > kMaxBlockSize) {
    fail(ErrorKind::kInvalidInput, "block size must be in [256, 65536]");
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::uint32_t n = blocks[i].block.sample_count;
    if (n > header.block_size || (i + 1 < blocks.size() && n != header.block_size)) {
      fail(ErrorKind::kInvalidInput,
           "block " + std::to_string(i) + " has " + std::to_string(n) + " samples");
    }
    sum += n;
  }
  if (sum != header.total_samples) {
    fail(ErrorKind::kInvalidInput, "block sample counts do not sum to total_samples");
  }

  const std::size_t before = sink.size();
  const auto head = encode_header(header);
  sink.insert(sink.end(), head.begin(), head.end());
  for (const auto& result : blocks) {
    BitWriter writer;
    serialize_block(result, writer);
    const auto& bytes = writer.bytes();
    sink.insert(sink.end(), bytes.begin(), bytes.end());
  }
  return sink.size() - before;
}

StreamReader::StreamReader(std::span<const std::uint8_t> bytes)
    : bytes_(bytes),
      header_(decode_header(bytes)),
      reader_(bytes.subspan(kHeaderBytes), kHeaderBytes) {}

std::optional<CompressedBlock> StreamReader::next() {
  const std::uint64_t expected_blocks = header_.block_count();
  if (index_ == expected_blocks) {
    if (reader_.bits_remaining() != 0) {
      throw Error(ErrorKind::kCorruptStream,
                  "trailing data after the last block; header total_samples is inconsistent",
                  reader_.byte_offset(), index_);
    }
    return std::nullopt;
  }

  const std::uint64_t offset = reader_.byte_offset();
  if (reader_.bits_remaining() == 0) {
    throw Error(ErrorKind::kCorruptStream,
                "stream ends after " + std::to_string(index_) + " of " +
                    std::to_string(expected_blocks) + " blocks",
                offset, index_);
  }
  CompressedBlock block;
  try {
    block = parse_block(reader_, header_.block_size);
  } catch (const Error& e) {
    throw Error(e.kind(), e.detail(), e.byte_offset().value_or(offset), index_);
  }

  const std::uint64_t remaining = header_.total_samples - samples_read_;
  const std::uint64_t want = std::min<std::uint64_t>(remaining, header_.block_size);
  if (block.sample_count != want) {
    throw Error(ErrorKind::kCorruptStream,
                "block has " + std::to_string(block.sample_count) + " samples, expected " +
                    std::to_string(want),
                offset, index_);
  }
  samples_read_ += block.sample_count;
  ++index_;
  return block;
}

}  // namespace obhs
