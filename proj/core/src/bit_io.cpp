#include "obhs/bit_io.hpp"

#include <algorithm>
#include <string>

#include "obhs/error.hpp"

namespace obhs {

void BitWriter::write_bits(std::uint32_t value, unsigned n) {
  if (n > 32) fail(ErrorKind::kInvalidInput, "cannot write more than 32 bits at once");
  if (n < 32 && (value >> n) != 0) {
    fail(ErrorKind::kInvalidInput,
         "value " + std::to_string(value) + " does not fit in " + std::to_string(n) + " bits");
  }
  acc_ = (acc_ << n) | value;
  pending_bits_ += n;
  while (pending_bits_ >= 8) {
    pending_bits_ -= 8;
    bytes_.push_back(static_cast<std::uint8_t>(acc_ >> pending_bits_));
  }
}

void BitWriter::write_packed(std::span<const std::uint8_t> bytes, std::uint64_t bit_count) {
  if (bit_count > bytes.size() * 8) {
    fail(ErrorKind::kInvalidInput, "packed bit count exceeds buffer");
  }
  const std::uint64_t whole = bit_count / 8;
  if (pending_bits_ == 0) {
    bytes_.insert(bytes_.end(), bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(whole));
  } else {
    for (std::uint64_t i = 0; i < whole; ++i) write_bits(bytes[i], 8);
  }
  const unsigned tail = static_cast<unsigned>(bit_count % 8);
  if (tail != 0) write_bits(static_cast<std::uint32_t>(bytes[whole] >> (8 - tail)), tail);
}

unsigned BitWriter::align() {
  const unsigned pad = pending_bits_ == 0 ? 0 : 8 - pending_bits_;
  if (pad != 0) write_bits(0, pad);
  return pad;
}

std::vector<std::uint8_t> BitWriter::take() {
  align();
  acc_ = 0;
  return std::move(bytes_);
}

std::uint32_t BitReader::read_bits(unsigned n) {
  if (n > 32) fail(ErrorKind::kInvalidInput, "cannot read more than 32 bits at once");
  if (n > bits_remaining()) {
    throw Error(ErrorKind::kCorruptStream,
                "unexpected end of data reading " + std::to_string(n) + " bits", byte_offset());
  }
  std::uint32_t value = 0;
  unsigned left = n;
  while (left > 0) {
    const unsigned bit_in_byte = static_cast<unsigned>(position_ & 7);
    const unsigned take = std::min(left, 8 - bit_in_byte);
    const std::uint32_t byte = bytes_[position_ >> 3];
    const std::uint32_t chunk = (byte >> (8 - bit_in_byte - take)) & ((1u << take) - 1);
    value = static_cast<std::uint32_t>((std::uint64_t{value} << take) | chunk);
    position_ += take;
    left -= take;
  }
  return value;
}

bool BitReader::read_bit() {
  if (position_ >= bytes_.size() * 8) {
    throw Error(ErrorKind::kCorruptStream, "unexpected end of data", byte_offset());
  }
  const bool bit = (bytes_[position_ >> 3] >> (7 - (position_ & 7))) & 1;
  ++position_;
  return bit;
}

std::uint32_t BitReader::align() {
  const unsigned pad = static_cast<unsigned>((8 - (position_ & 7)) & 7);
  return pad == 0 ? 0 : read_bits(pad);
}

}  // namespace obhs
