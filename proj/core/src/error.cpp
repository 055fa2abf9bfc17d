#include "obhs/error.hpp"

#include <utility>

namespace obhs {

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::uint64_t> byte_offset,
                     std::optional<std::uint64_t> block_index) {
  std::string out(to_string(kind));
  out += ": ";
  out += message;
  if (block_index) out += " (block " + std::to_string(*block_index) + ")";
  if (byte_offset) out += " (byte offset " + std::to_string(*byte_offset) + ")";
  return out;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid input";
    case ErrorKind::kCorruptStream:
      return "corrupt stream";
    case ErrorKind::kUnsupportedFormat:
      return "unsupported format";
    case ErrorKind::kIo:
      return "i/o error";
    case ErrorKind::kInternal:
      return "internal error";
  }
  return "unknown error";
}

Error::Error(ErrorKind kind, std::string message,
             std::optional<std::uint64_t> byte_offset,
             std::optional<std::uint64_t> block_index)
    : std::runtime_error(decorate(kind, message, byte_offset, block_index)),
      kind_(kind),
      detail_(std::move(message)),
      byte_offset_(byte_offset),
      block_index_(block_index) {}

void fail(ErrorKind kind, std::string message) {
  throw Error(kind, std::move(message));
}

}  // namespace obhs
