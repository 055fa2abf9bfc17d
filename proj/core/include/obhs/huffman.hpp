#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "obhs/symbol.hpp"

namespace obhs {

// Longest code the 5-bit length field can carry.
inline constexpr unsigned kMaxCodeLength = 32;

struct SymbolCount {
  Symbol symbol;
  std::uint32_t count;

  friend bool operator==(const SymbolCount&, const SymbolCount&) = default;
};

// Occurrence counts of the distinct symbols of one block, in increasing
// symbol order. Absent symbols are not stored.
class FrequencyTable {
 public:
  // Validates the invariants: strictly increasing symbols, counts >= 1,
  // counts summing to `total`.
  FrequencyTable(std::vector<SymbolCount> entries, std::uint64_t total);

  std::span<const SymbolCount> entries() const noexcept { return entries_; }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::vector<SymbolCount> entries_;
  std::uint64_t total_;
};

struct SymbolLength {
  Symbol symbol;
  std::uint8_t length;

  friend bool operator==(const SymbolLength&, const SymbolLength&) = default;
};

// Code length per distinct symbol, in increasing symbol order. Satisfies
// Kraft equality (sum of 2^-len == 1), or == 1/2 for a lone symbol.
class CodeLengthTable {
 public:
  explicit CodeLengthTable(std::vector<SymbolLength> entries);

  std::span<const SymbolLength> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::uint8_t max_length() const noexcept;

  friend bool operator==(const CodeLengthTable&, const CodeLengthTable&) = default;

 private:
  std::vector<SymbolLength> entries_;
};

struct Codeword {
  Symbol symbol;
  std::uint8_t length;
  std::uint32_t code;  // right-aligned, emitted MSB-first

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Canonical codewords ordered by (length, symbol). The codes are fully
// determined by the (symbol, length) pairs.
class CanonicalCodebook {
 public:
  explicit CanonicalCodebook(std::vector<Codeword> entries) : entries_(std::move(entries)) {}

  std::span<const Codeword> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  // (symbol, length) projection in increasing symbol order.
  CodeLengthTable lengths() const;

  friend bool operator==(const CanonicalCodebook&, const CanonicalCodebook&) = default;

 private:
  std::vector<Codeword> entries_;
};

// Throws kInvalidInput for an empty block or one longer than 65536 samples.
FrequencyTable compute_frequencies(std::span<const Symbol> block);

// Optimal Huffman code lengths. Ties in the merge order are broken by
// (weight, rank): a leaf ranks by its symbol value, an internal node by
// 65536 + its creation index. A single symbol gets length 1.
CodeLengthTable build_code_lengths(const FrequencyTable& freq);

// Throws kInternal if the lengths violate the Kraft invariant.
CanonicalCodebook assign_canonical_codes(const CodeLengthTable& lengths);

// Exact Kraft check used by both the encoder and the stream parser. The sum
// must be exactly 1, or exactly 1/2 when there is a single entry.
bool kraft_complete(std::span<const SymbolLength> entries) noexcept;

}  // namespace obhs
