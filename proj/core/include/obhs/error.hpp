#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obhs {

enum class ErrorKind {
  kInvalidInput,
  kCorruptStream,
  kUnsupportedFormat,
  kIo,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

// The single exception type thrown by the library. Stream errors carry the
// byte offset (and block index, when known) at which decoding failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<std::uint64_t> byte_offset = std::nullopt,
        std::optional<std::uint64_t> block_index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  // The message without kind or location decoration.
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::uint64_t> byte_offset() const noexcept { return byte_offset_; }
  std::optional<std::uint64_t> block_index() const noexcept { return block_index_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<std::uint64_t> byte_offset_;
  std::optional<std::uint64_t> block_index_;
};

[[noreturn]] void fail(ErrorKind kind, std::string message);

}  // namespace obhs
