#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace obhs {

// Append-only MSB-first bit sink. Padding bits written by align() are 0.
class BitWriter {
 public:
  BitWriter() = default;

  // Appends the low `n` bits of `value`, most significant first. n <= 32;
  // throws kInvalidInput if value >= 2^n.
  void write_bits(std::uint32_t value, unsigned n);
  void write_bit(bool bit) { write_bits(bit ? 1u : 0u, 1); }

  // Copies `bit_count` bits from an MSB-first packed buffer.
  void write_packed(std::span<const std::uint8_t> bytes, std::uint64_t bit_count);

  // Zero-pads to the next byte boundary; returns the number of pad bits.
  unsigned align();

  bool byte_aligned() const noexcept { return pending_bits_ == 0; }
  std::uint64_t bit_count() const noexcept { return bytes_.size() * 8 + pending_bits_; }

  // Bytes completed so far. Only meaningful when byte_aligned().
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  // Aligns and hands over the buffer.
  std::vector<std::uint8_t> take();

 private:
  std::vector<std::uint8_t> bytes_;
  std::uint64_t acc_ = 0;
  unsigned pending_bits_ = 0;
};

// MSB-first bit cursor over a borrowed byte range. `base_offset` is added to
// positions reported in errors so they refer to the enclosing file.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bytes, std::uint64_t base_offset = 0) noexcept
      : bytes_(bytes), base_offset_(base_offset) {}

  // n <= 32. Throws kCorruptStream on underrun.
  std::uint32_t read_bits(unsigned n);
  bool read_bit();

  // Skips to the next byte boundary and returns the skipped bits' value.
  std::uint32_t align();

  bool byte_aligned() const noexcept { return (position_ & 7) == 0; }
  std::uint64_t bit_position() const noexcept { return position_; }
  std::uint64_t bits_remaining() const noexcept { return bytes_.size() * 8 - position_; }
  std::uint64_t byte_offset() const noexcept { return base_offset_ + position_ / 8; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t position_ = 0;
  std::uint64_t base_offset_;
};

}  // namespace obhs
