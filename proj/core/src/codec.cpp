#include "obhs/codec.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "obhs/error.hpp"

namespace obhs {

std::vector<BlockEncodeResult> encode_blocks(std::span<const Symbol> samples,
                                             const EncodeOptions& options) {
  const std::uint32_t bs = options.block_size;
  if (bs < kMinBlockSize || bs > kMaxBlockSize) {
    fail(ErrorKind::kInvalidInput, "block size must be in [256, 65536]");
  }
  const std::size_t count = (samples.size() + bs - 1) / bs;
  std::vector<BlockEncodeResult> out(count);
  auto encode_one = [&](std::size_t i) {
    const std::size_t begin = i * bs;
    out[i] = encode_block(samples.subspan(begin, std::min<std::size_t>(bs, samples.size() - begin)));
  };

  const unsigned threads = options.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) encode_one(i);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; !failed && (i = next++) < count;) {
          try {
            encode_one(i);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<std::uint8_t> encode_stream(std::span<const Symbol> samples, std::uint8_t channels,
                                        std::uint32_t sample_rate, const EncodeOptions& options) {
  const auto blocks = encode_blocks(samples, options);
  StreamHeader header;
  header.channels = channels;
  header.sample_rate = sample_rate;
  header.block_size = options.block_size;
  header.total_samples = samples.size();
  std::vector<std::uint8_t> out;
  write_stream(header, blocks, out);
  return out;
}

DecodedStream decode_stream(std::span<const std::uint8_t> bytes) {
  StreamReader reader(bytes);
  DecodedStream out{reader.header(), {}};
  out.samples.reserve(static_cast<std::size_t>(
      std::min<std::uint64_t>(out.header.total_samples, bytes.size() * 8)));
  while (auto block = reader.next()) {
    const std::uint64_t index = reader.blocks_read() - 1;
    try {
      const auto decoded = decode_block(*block);
      out.samples.insert(out.samples.end(), decoded.begin(), decoded.end());
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), e.byte_offset(), index);
    }
  }
  return out;
}

}  // namespace obhs
