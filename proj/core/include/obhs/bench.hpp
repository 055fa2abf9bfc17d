#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "obhs/container.hpp"
#include "obhs/wav.hpp"

namespace obhs {

// One row of the compression report. original_bytes is the canonical WAV
// size of the input; compressed_bytes the .obhs stream size.
struct BenchRecord {
  std::string content;
  std::uint64_t original_bytes = 0;
  std::uint64_t compressed_bytes = 0;
  double ratio_pct = 0.0;
  double reduction_pct = 0.0;
  double median_block_encode_us = 0.0;
  double p95_block_encode_us = 0.0;
  std::uint64_t blocks = 0;
};

struct BenchConfig {
  std::uint64_t seed = 42;
  double seconds = 10.0;
  std::uint32_t block_size = kDefaultBlockSize;
  std::uint32_t sample_rate = 44100;
  // Overrides the per-kind generator amplitude when set.
  std::optional<double> amplitude;
  double frequency = 440.0;
};

// Encodes `audio` block by block, timing each encode_block call on a
// monotonic clock (I/O excluded).
BenchRecord bench_content(std::string label, const WavData& audio, std::uint32_t block_size);

// Silence, pink and tone rows from generated corpora, then one row per
// user-supplied WAV (labelled by file stem).
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::span<const std::filesystem::path> real_audio = {});

inline constexpr std::string_view kBenchCsvHeader =
    "content,original_bytes,compressed_bytes,ratio_pct,reduction_pct,"
    "median_block_encode_us,p95_block_encode_us,blocks";

std::string to_csv(std::span<const BenchRecord> records);

// Time to fill one block, in milliseconds.
constexpr double buffering_latency_ms(std::uint32_t block_size, std::uint32_t sample_rate) {
  return 1000.0 * block_size / sample_rate;
}

double median(std::vector<double> values);
// Nearest-rank percentile, p in (0, 100].
double percentile(std::vector<double> values, double p);

}  // namespace obhs
