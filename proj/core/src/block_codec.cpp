#include "obhs/block_codec.hpp"

#include <algorithm>
#include <string>

#include "obhs/error.hpp"

namespace obhs {

DecodeTable::DecodeTable(std::span<const SymbolLength> table) {
  if (table.empty()) fail(ErrorKind::kCorruptStream, "empty code table");
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i - 1].symbol >= table[i].symbol) {
      fail(ErrorKind::kCorruptStream, "code table symbols are not strictly increasing");
    }
  }
  if (!kraft_complete(table)) fail(ErrorKind::kCorruptStream, "code lengths violate Kraft equality");

  for (const auto& e : table) {
    ++count_[e.length];
    max_length_ = std::max<unsigned>(max_length_, e.length);
  }
  std::uint64_t code = 0;
  std::uint32_t index = 0;
  for (unsigned len = 1; len <= kMaxCodeLength; ++len) {
    first_code_[len] = static_cast<std::uint32_t>(code);
    first_index_[len] = index;
    index += count_[len];
    code = (code + count_[len]) << 1;
  }

  sorted_symbols_.resize(table.size());
  std::array<std::uint32_t, kMaxCodeLength + 1> fill = first_index_;
  // Input is symbol-ordered, so each length bucket comes out symbol-ordered.
  for (const auto& e : table) sorted_symbols_[fill[e.length]++] = e.symbol;
}

Symbol DecodeTable::decode(BitReader& reader) const {
  std::uint32_t code = 0;
  for (unsigned len = 1; len <= max_length_; ++len) {
    code = (code << 1) | (reader.read_bit() ? 1u : 0u);
    const std::uint32_t offset = code - first_code_[len];
    if (offset < count_[len]) return sorted_symbols_[first_index_[len] + offset];
  }
  throw Error(ErrorKind::kCorruptStream, "bit pattern matches no codeword", reader.byte_offset());
}

std::uint64_t estimate_encoded_bits(const FrequencyTable& freq, const CodeLengthTable& lengths) {
  const auto f = freq.entries();
  const auto l = lengths.entries();
  if (f.size() != l.size()) fail(ErrorKind::kInternal, "frequency and length tables differ in size");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].symbol != l[i].symbol) {
      fail(ErrorKind::kInternal, "frequency and length tables cover different symbols");
    }
    bits += std::uint64_t{f[i].count} * l[i].length;
  }
  return bits;
}

BlockEncodeResult encode_block(std::span<const Symbol> samples) {
  const FrequencyTable freq = compute_frequencies(samples);
  const CodeLengthTable lengths = build_code_lengths(freq);
  const std::uint64_t payload_bits = estimate_encoded_bits(freq, lengths);

  BlockEncodeResult result;
  result.huffman_bits = huffman_record_bits(lengths.size(), payload_bits);
  result.raw_bits = raw_record_bits(samples.size());

  CompressedBlock& block = result.block;
  block.sample_count = static_cast<std::uint32_t>(samples.size());

  if (result.huffman_bits < result.raw_bits) {
    block.mode = BlockMode::kHuffman;
    block.table.assign(lengths.entries().begin(), lengths.entries().end());

    struct Entry {
      std::uint32_t code;
      std::uint8_t length;
    };
    thread_local std::vector<Entry> lookup(kAlphabetSize);
    const CanonicalCodebook codebook = assign_canonical_codes(lengths);
    for (const auto& c : codebook.entries()) {
      lookup[c.symbol] = {c.code, c.length};
    }
    BitWriter writer;
    for (Symbol s : samples) writer.write_bits(lookup[s].code, lookup[s].length);
    block.payload_bits = writer.bit_count();
    block.payload = writer.take();
    if (block.payload_bits != payload_bits) {
      fail(ErrorKind::kInternal, "payload size differs from the estimate");
    }
  } else {
    block.mode = BlockMode::kRaw;
    block.payload.reserve(samples.size() * 2);
    for (Symbol s : samples) {
      block.payload.push_back(static_cast<std::uint8_t>(s & 0xFF));
      block.payload.push_back(static_cast<std::uint8_t>(s >> 8));
    }
    block.payload_bits = std::uint64_t{16} * samples.size();
  }
  return result;
}

std::vector<Symbol> decode_block(const CompressedBlock& block) {
  if (block.sample_count == 0 || block.sample_count > kMaxBlockSamples) {
    fail(ErrorKind::kCorruptStream,
         "block sample count " + std::to_string(block.sample_count) + " out of range");
  }
  if (block.payload_bits > block.payload.size() * 8) {
    fail(ErrorKind::kCorruptStream, "payload shorter than its declared bit length");
  }
  std::vector<Symbol> out;
  out.reserve(block.sample_count);

  if (block.mode == BlockMode::kRaw) {
    if (block.payload_bits != std::uint64_t{16} * block.sample_count) {
      fail(ErrorKind::kCorruptStream, "raw payload size does not match sample count");
    }
    for (std::uint32_t i = 0; i < block.sample_count; ++i) {
      out.push_back(static_cast<Symbol>(block.payload[2 * i] | (block.payload[2 * i + 1] << 8)));
    }
    return out;
  }

  const DecodeTable table(block.table);
  const std::span<const std::uint8_t> bytes(block.payload.data(), (block.payload_bits + 7) / 8);
  BitReader reader(bytes);
  for (std::uint32_t i = 0; i < block.sample_count; ++i) {
    out.push_back(table.decode(reader));
    if (reader.bit_position() > block.payload_bits) {
      fail(ErrorKind::kCorruptStream, "codeword runs past the end of the payload");
    }
  }
  if (reader.bit_position() != block.payload_bits) {
    fail(ErrorKind::kCorruptStream, "payload has trailing bits after the last sample");
  }
  return out;
}

}  // namespace obhs
