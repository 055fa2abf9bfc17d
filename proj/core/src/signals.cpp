#include "obhs/signals.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "obhs/error.hpp"

namespace obhs {

namespace {

Symbol quantize(double value) {
  const double clamped = std::clamp(std::round(value), -32768.0, 32767.0);
  return to_symbol(static_cast<std::int16_t>(clamped));
}

}  // namespace

std::optional<SignalKind> parse_signal_kind(std::string_view name) {
  if (name == "silence") return SignalKind::kSilence;
  if (name == "tone") return SignalKind::kTone;
  if (name == "pink") return SignalKind::kPink;
  return std::nullopt;
}

std::string_view to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::kSilence:
      return "silence";
    case SignalKind::kTone:
      return "tone";
    case SignalKind::kPink:
      return "pink";
  }
  return "unknown";
}

double GeneratorSpec::resolved_amplitude() const noexcept {
  if (amplitude) return *amplitude;
  return kind == SignalKind::kPink ? kDefaultPinkAmplitude : kDefaultToneAmplitude;
}

std::size_t GeneratorSpec::sample_count() const noexcept {
  return static_cast<std::size_t>(std::llround(seconds * sample_rate));
}

void validate(const GeneratorSpec& spec) {
  if (!(spec.seconds > 0.0) || !std::isfinite(spec.seconds)) {
    fail(ErrorKind::kInvalidInput, "duration must be positive");
  }
  if (spec.sample_rate == 0) fail(ErrorKind::kInvalidInput, "sample rate must be positive");
  const double amp = spec.resolved_amplitude();
  if (!(amp > 0.0 && amp <= 1.0)) {
    fail(ErrorKind::kInvalidInput, "amplitude must be in (0, 1]");
  }
  if (spec.kind == SignalKind::kTone &&
      !(spec.frequency > 0.0 && spec.frequency < spec.sample_rate / 2.0)) {
    fail(ErrorKind::kInvalidInput, "tone frequency " + std::to_string(spec.frequency) +
                                       " Hz must lie strictly between 0 and Nyquist");
  }
}

std::vector<Symbol> gen_silence(const GeneratorSpec& spec) {
  validate(spec);
  return std::vector<Symbol>(spec.sample_count(), 0);
}

std::vector<Symbol> gen_tone(const GeneratorSpec& spec) {
  validate(spec);
  const double scale = spec.resolved_amplitude() * 32767.0;
  const double step = 2.0 * std::numbers::pi * spec.frequency / spec.sample_rate;
  std::vector<Symbol> out(spec.sample_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = quantize(scale * std::sin(step * static_cast<double>(i)));
  }
  return out;
}

double PinkNoise::next() noexcept {
  if (index_ == 0) {
    for (auto& row : rows_) row = rng_.next_white();
  } else {
    const int r = std::countr_zero(index_ + 1);
    if (r < kRows) rows_[r] = rng_.next_white();
  }
  ++index_;
  // Summed afresh in row order so every platform rounds identically.
  double sum = 0.0;
  for (double row : rows_) sum += row;
  return (sum + rng_.next_white()) / (kRows + 1);
}

std::vector<Symbol> gen_pink(const GeneratorSpec& spec) {
  validate(spec);
  const double scale = spec.resolved_amplitude() * 32767.0;
  PinkNoise pink(spec.seed);
  std::vector<Symbol> out(spec.sample_count());
  for (auto& s : out) s = quantize(pink.next() * scale);
  return out;
}

std::vector<Symbol> generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case SignalKind::kSilence:
      return gen_silence(spec);
    case SignalKind::kTone:
      return gen_tone(spec);
    case SignalKind::kPink:
      return gen_pink(spec);
  }
  fail(ErrorKind::kInvalidInput, "unknown signal kind");
}

}  // namespace obhs
