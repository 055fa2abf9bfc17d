#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "obhs/symbol.hpp"

namespace obhs {

enum class SignalKind { kSilence, kTone, kPink };

std::optional<SignalKind> parse_signal_kind(std::string_view name);
std::string_view to_string(SignalKind kind);

inline constexpr double kDefaultToneAmplitude = 0.8;
inline constexpr double kDefaultPinkAmplitude = 0.5;
inline constexpr double kDefaultToneFrequency = 440.0;

struct GeneratorSpec {
  SignalKind kind = SignalKind::kSilence;
  double seconds = 10.0;
  std::uint32_t sample_rate = 44100;
  std::optional<double> amplitude;  // fraction of full scale; per-kind default
  double frequency = kDefaultToneFrequency;  // tone only
  std::uint64_t seed = 42;                   // pink only

  double resolved_amplitude() const noexcept;
  std::size_t sample_count() const noexcept;
};

// Throws kInvalidInput for non-positive duration or rate, amplitude outside
// (0, 1], or a tone frequency outside (0, sample_rate / 2).
void validate(const GeneratorSpec& spec);

std::vector<Symbol> gen_silence(const GeneratorSpec& spec);
std::vector<Symbol> gen_tone(const GeneratorSpec& spec);
std::vector<Symbol> gen_pink(const GeneratorSpec& spec);
std::vector<Symbol> generate(const GeneratorSpec& spec);

// 64-bit LCG (Knuth MMIX constants); white values are the top 32 bits
// mapped to [-1, 1).
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_raw() noexcept {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }
  double next_white() noexcept {
    return static_cast<double>(next_raw() >> 32) / 2147483648.0 - 1.0;
  }

 private:
  std::uint64_t state_;
};

// Voss-McCartney pink noise: 16 held rows plus a per-sample white source.
// Row r is redrawn before sample i when r == ctz(i + 1). The first sample
// draws rows 0..15 and then the white source. Output is in [-1, 1).
class PinkNoise {
 public:
  static constexpr int kRows = 16;

  explicit PinkNoise(std::uint64_t seed) noexcept : rng_(seed) {}

  double next() noexcept;

 private:
  Lcg64 rng_;
  std::array<double, kRows> rows_{};
  std::uint64_t index_ = 0;
};

}  // namespace obhs
