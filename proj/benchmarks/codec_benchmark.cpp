#include <benchmark/benchmark.h>

#include "obhs/block_codec.hpp"
#include "obhs/codec.hpp"
#include "obhs/signals.hpp"

namespace {

std::vector<obhs::Symbol> corpus(obhs::SignalKind kind, double seconds) {
  obhs::GeneratorSpec spec;
  spec.kind = kind;
  spec.seconds = seconds;
  return obhs::generate(spec);
}

const std::vector<obhs::Symbol>& block_of(obhs::SignalKind kind) {
  static const auto silence = corpus(obhs::SignalKind::kSilence, 4096.0 / 44100);
  static const auto pink = corpus(obhs::SignalKind::kPink, 4096.0 / 44100);
  static const auto tone = corpus(obhs::SignalKind::kTone, 4096.0 / 44100);
  switch (kind) {
    case obhs::SignalKind::kSilence:
      return silence;
    case obhs::SignalKind::kPink:
      return pink;
    case obhs::SignalKind::kTone:
      return tone;
  }
  return silence;
}

const std::vector<obhs::Symbol>& quiet_pink_block() {
  static const auto quiet = [] {
    obhs::GeneratorSpec spec;
    spec.kind = obhs::SignalKind::kPink;
    spec.seconds = 4096.0 / 44100;
    spec.amplitude = 0.01;
    return obhs::generate(spec);
  }();
  return quiet;
}

void BM_EncodeBlock(benchmark::State& state, obhs::SignalKind kind) {
  const auto& block = block_of(kind);
  for (auto _ : state) benchmark::DoNotOptimize(obhs::encode_block(block));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(block.size()));
}
BENCHMARK_CAPTURE(BM_EncodeBlock, silence, obhs::SignalKind::kSilence);
BENCHMARK_CAPTURE(BM_EncodeBlock, pink, obhs::SignalKind::kPink);
BENCHMARK_CAPTURE(BM_EncodeBlock, tone, obhs::SignalKind::kTone);

void BM_EncodeBlockQuietPink(benchmark::State& state) {
  const auto& block = quiet_pink_block();
  for (auto _ : state) benchmark::DoNotOptimize(obhs::encode_block(block));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(block.size()));
}
BENCHMARK(BM_EncodeBlockQuietPink);

void BM_DecodeBlockQuietPink(benchmark::State& state) {
  const auto encoded = obhs::encode_block(quiet_pink_block()).block;
  for (auto _ : state) benchmark::DoNotOptimize(obhs::decode_block(encoded));
  state.SetItemsProcessed(state.iterations() * encoded.sample_count);
}
BENCHMARK(BM_DecodeBlockQuietPink);

void BM_BuildCodeLengths(benchmark::State& state) {
  const auto freq = obhs::compute_frequencies(block_of(obhs::SignalKind::kPink));
  for (auto _ : state) benchmark::DoNotOptimize(obhs::build_code_lengths(freq));
  state.SetComplexityN(static_cast<std::int64_t>(freq.size()));
}
BENCHMARK(BM_BuildCodeLengths);

// Whole-stream encode over growing durations; the fitted complexity should
// come out linear.
void BM_EncodeStreamPink(benchmark::State& state) {
  const auto samples = corpus(obhs::SignalKind::kPink, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(obhs::encode_stream(samples, 1, 44100));
  state.SetComplexityN(static_cast<std::int64_t>(samples.size()));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()) * 2);
}
BENCHMARK(BM_EncodeStreamPink)->Arg(5)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EncodeStreamParallel(benchmark::State& state) {
  const auto samples = corpus(obhs::SignalKind::kPink, 20);
  for (auto _ : state) benchmark::DoNotOptimize(obhs::encode_stream(samples, 1, 44100, {4096, true}));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()) * 2);
}
BENCHMARK(BM_EncodeStreamParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
