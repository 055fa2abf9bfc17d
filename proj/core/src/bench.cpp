#include "obhs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "obhs/block_codec.hpp"
#include "obhs/error.hpp"
#include "obhs/file_io.hpp"
#include "obhs/signals.hpp"

namespace obhs {

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * values.size()));
  return values[std::clamp<std::size_t>(rank, 1, values.size()) - 1];
}

BenchRecord bench_content(std::string label, const WavData& audio, std::uint32_t block_size) {
  if (block_size < kMinBlockSize || block_size > kMaxBlockSize) {
    fail(ErrorKind::kInvalidInput, "block size must be in [256, 65536]");
  }
  const std::span<const Symbol> samples(audio.samples);
  const std::size_t count = (samples.size() + block_size - 1) / block_size;

  std::vector<BlockEncodeResult> blocks;
  std::vector<double> timings_us;
  blocks.reserve(count);
  timings_us.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t begin = i * block_size;
    const auto block = samples.subspan(begin, std::min<std::size_t>(block_size, samples.size() - begin));
    const auto t0 = std::chrono::steady_clock::now();
    blocks.push_back(encode_block(block));
    const auto t1 = std::chrono::steady_clock::now();
    timings_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
  }

  StreamHeader header;
  header.channels = static_cast<std::uint8_t>(audio.meta.channels);
  header.sample_rate = audio.meta.sample_rate;
  header.block_size = block_size;
  header.total_samples = samples.size();
  std::vector<std::uint8_t> stream;
  write_stream(header, blocks, stream);

  BenchRecord r;
  r.content = std::move(label);
  r.original_bytes = wav_file_bytes(samples.size());
  r.compressed_bytes = stream.size();
  r.ratio_pct = 100.0 * static_cast<double>(r.compressed_bytes) / static_cast<double>(r.original_bytes);
  r.reduction_pct = 100.0 - r.ratio_pct;
  r.median_block_encode_us = median(timings_us);
  r.p95_block_encode_us = percentile(std::move(timings_us), 95.0);
  r.blocks = count;
  return r;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::span<const std::filesystem::path> real_audio) {
  std::vector<BenchRecord> out;
  const AudioMeta meta{config.sample_rate, 1, 16};
  for (SignalKind kind : {SignalKind::kSilence, SignalKind::kPink, SignalKind::kTone}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.seconds = config.seconds;
    spec.sample_rate = config.sample_rate;
    spec.seed = config.seed;
    spec.frequency = config.frequency;
    if (kind != SignalKind::kSilence) spec.amplitude = config.amplitude;
    out.push_back(bench_content(std::string(to_string(kind)), {meta, generate(spec)}, config.block_size));
  }
  for (const auto& path : real_audio) {
    const auto bytes = read_file(path);
    out.push_back(bench_content(path.stem().string(), read_wav(bytes), config.block_size));
  }
  return out;
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::string out(kBenchCsvHeader);
  out += '\n';
  char line[512];
  for (const auto& r : records) {
    std::snprintf(line, sizeof line, "%s,%llu,%llu,%.3f,%.3f,%.2f,%.2f,%llu\n", r.content.c_str(),
                  static_cast<unsigned long long>(r.original_bytes),
                  static_cast<unsigned long long>(r.compressed_bytes), r.ratio_pct, r.reduction_pct,
                  r.median_block_encode_us, r.p95_block_encode_us,
                  static_cast<unsigned long long>(r.blocks));
    out += line;
  }
  return out;
}

}  // namespace obhs
