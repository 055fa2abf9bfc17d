#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "obhs/codec.hpp"
#include "obhs/file_io.hpp"
#include "obhs/wav.hpp"

namespace obhs::cli {

namespace {

void print_summary(std::ostream& out, std::uint64_t original, std::uint64_t compressed) {
  const double ratio = original == 0 ? 0.0 : 100.0 * compressed / original;
  out << "original_bytes=" << original << " compressed_bytes=" << compressed << std::fixed
      << std::setprecision(2) << " ratio_pct=" << ratio << " reduction_pct=" << 100.0 - ratio
      << '\n';
}

// Runs `body`, translating library errors into exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "obhs: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "obhs: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::bad_alloc&) {
    err << "obhs: out of memory\n";
    return kExitIo;
  }
}

WavData load_wav(const std::filesystem::path& path) { return read_wav(read_file(path)); }

std::vector<std::uint8_t> encode_wav(const WavData& wav, std::uint32_t block_size, bool parallel) {
  if (wav.meta.channels > 255) fail(ErrorKind::kInvalidInput, "more than 255 channels");
  return encode_stream(wav.samples, static_cast<std::uint8_t>(wav.meta.channels),
                       wav.meta.sample_rate, {block_size, parallel});
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return kExitUsage;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kCorruptStream:
    case ErrorKind::kUnsupportedFormat:
      return kExitCorrupt;
    case ErrorKind::kInternal:
      return kExitMismatch;
  }
  return kExitUsage;
}

int cmd_encode(const EncodeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WavData wav = load_wav(args.input);
    const auto stream = encode_wav(wav, args.block_size, args.parallel);
    write_file_atomic(args.output, stream);
    print_summary(out, wav_file_bytes(wav.samples.size()), stream.size());
    return kExitOk;
  });
}

int cmd_decode(const std::filesystem::path& input, const std::filesystem::path& output,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bytes = read_file(input);
    const DecodedStream decoded = decode_stream(bytes);
    const AudioMeta meta{decoded.header.sample_rate, decoded.header.channels, 16};
    std::vector<std::uint8_t> wav;
    write_wav(meta, decoded.samples, wav);
    write_file_atomic(output, wav);
    out << "decoded " << decoded.samples.size() << " samples from "
        << decoded.header.block_count() << " blocks\n";
    return kExitOk;
  });
}

int cmd_verify(const std::filesystem::path& input, std::uint32_t block_size, bool parallel,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WavData wav = load_wav(input);
    const auto stream = encode_wav(wav, block_size, parallel);
    const DecodedStream decoded = decode_stream(stream);
    if (decoded.samples != wav.samples || decoded.header.sample_rate != wav.meta.sample_rate ||
        decoded.header.channels != wav.meta.channels) {
      err << "obhs: verification failed: decoded samples differ from the input\n";
      return static_cast<int>(kExitMismatch);
    }
    out << "verified " << wav.samples.size() << " samples losslessly; ";
    print_summary(out, wav_file_bytes(wav.samples.size()), stream.size());
    return static_cast<int>(kExitOk);
  });
}

int cmd_gen(const GeneratorSpec& spec, const std::filesystem::path& output, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    const auto samples = generate(spec);
    std::vector<std::uint8_t> wav;
    write_wav({spec.sample_rate, 1, 16}, samples, wav);
    write_file_atomic(output, wav);
    out << "wrote " << samples.size() << " " << to_string(spec.kind) << " samples ("
        << wav.size() << " bytes) to " << output.string() << '\n';
    return kExitOk;
  });
}

int cmd_bench(const BenchConfig& config, const std::filesystem::path& csv,
              const std::vector<std::filesystem::path>& real_audio, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto records = run_bench(config, real_audio);
    const std::string text = to_csv(records);
    write_file_atomic(csv, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
    out << text;
    out << std::fixed << std::setprecision(2)
        << "buffering_latency_ms=" << buffering_latency_ms(config.block_size, config.sample_rate)
        << " (block_size=" << config.block_size << ", sample_rate=" << config.sample_rate << ")\n";
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"OBHS block Huffman audio codec"};
  app.require_subcommand(1);

  std::uint32_t block_size = kDefaultBlockSize;
  bool parallel = false;
  auto add_block_flags = [&](CLI::App* cmd) {
    cmd->add_option("--block-size", block_size, "Samples per block")
        ->check(CLI::Range(kMinBlockSize, kMaxBlockSize));
    cmd->add_flag("--parallel", parallel, "Encode blocks concurrently");
  };

  std::string input;
  std::string output;

  auto* encode = app.add_subcommand("encode", "Compress a 16-bit PCM WAV file");
  encode->add_option("input", input, "Input WAV")->required();
  encode->add_option("output", output, "Output .obhs (default: input with .obhs extension)");
  encode->add_option("--out", output, "Output .obhs");
  add_block_flags(encode);

  auto* decode = app.add_subcommand("decode", "Decompress an .obhs stream to WAV");
  decode->add_option("input", input, "Input .obhs")->required();
  decode->add_option("output", output, "Output WAV (default: input with .wav extension)");
  decode->add_option("--out", output, "Output WAV");

  auto* verify = app.add_subcommand("verify", "Encode and decode in memory and compare");
  verify->add_option("input", input, "Input WAV")->required();
  add_block_flags(verify);

  std::string kind_name;
  double seconds = 10.0;
  std::uint64_t seed = 42;
  std::optional<double> amplitude;
  double frequency = kDefaultToneFrequency;
  std::uint32_t sample_rate = 44100;

  auto* gen = app.add_subcommand("gen", "Generate a deterministic test signal as WAV");
  gen->add_option("kind", kind_name, "silence | tone | pink")
      ->required()
      ->check(CLI::IsMember({"silence", "tone", "pink"}));
  gen->add_option("--seconds", seconds, "Duration in seconds");
  gen->add_option("--seed", seed, "Pink noise seed");
  gen->add_option("--amplitude", amplitude, "Fraction of full scale in (0, 1]");
  gen->add_option("--frequency", frequency, "Tone frequency in Hz");
  gen->add_option("--sample-rate", sample_rate, "Sample rate in Hz");
  gen->add_option("--out", output, "Output WAV")->required();

  std::vector<std::string> real_audio;
  auto* bench = app.add_subcommand("bench", "Compression-ratio and latency report as CSV");
  bench->add_option("--seed", seed, "Pink noise seed");
  bench->add_option("--seconds", seconds, "Duration of each generated corpus");
  bench->add_option("--amplitude", amplitude, "Override generator amplitude");
  bench->add_option("--frequency", frequency, "Tone frequency in Hz");
  bench->add_option("--out", output, "Output CSV")->required();
  bench->add_option("wavs", real_audio, "Additional 16-bit WAV files to report");
  bench->add_option("--block-size", block_size, "Samples per block")
      ->check(CLI::Range(kMinBlockSize, kMaxBlockSize));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*encode) {
    EncodeArgs args{input, output, block_size, parallel};
    if (args.output.empty()) args.output = std::filesystem::path(input).replace_extension(".obhs");
    return cmd_encode(args, out, err);
  }
  if (*decode) {
    std::filesystem::path dest = output;
    if (dest.empty()) dest = std::filesystem::path(input).replace_extension(".wav");
    return cmd_decode(input, dest, out, err);
  }
  if (*verify) return cmd_verify(input, block_size, parallel, out, err);
  if (*gen) {
    GeneratorSpec spec;
    spec.kind = *parse_signal_kind(kind_name);
    spec.seconds = seconds;
    spec.seed = seed;
    spec.amplitude = amplitude;
    spec.frequency = frequency;
    spec.sample_rate = sample_rate;
    return cmd_gen(spec, output, out, err);
  }
  if (*bench) {
    BenchConfig config;
    config.seed = seed;
    config.seconds = seconds;
    config.block_size = block_size;
    config.amplitude = amplitude;
    config.frequency = frequency;
    std::vector<std::filesystem::path> paths(real_audio.begin(), real_audio.end());
    return cmd_bench(config, output, paths, out, err);
  }
  return kExitUsage;
}

}  // namespace obhs::cli
