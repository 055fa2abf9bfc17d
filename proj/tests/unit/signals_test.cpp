#include "obhs/signals.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "obhs/error.hpp"
#include "obhs/huffman.hpp"
#include "oracles.hpp"

#ifdef OBHS_HAVE_FFTW
#include <fftw3.h>
#endif

namespace obhs {
namespace {

std::vector<std::int32_t> as_pcm(const std::vector<Symbol>& s) {
  std::vector<std::int32_t> out;
  for (auto v : s) out.push_back(to_pcm(v));
  return out;
}

GeneratorSpec spec_of(SignalKind kind, double seconds) {
  GeneratorSpec s;
  s.kind = kind;
  s.seconds = seconds;
  return s;
}

TEST(GenSilence, TenSeconds) {
  const auto s = gen_silence(spec_of(SignalKind::kSilence, 10));
  EXPECT_EQ(s.size(), 441000u);
  EXPECT_TRUE(std::all_of(s.begin(), s.end(), [](Symbol v) { return v == 0; }));
  EXPECT_EQ(compute_frequencies(std::span(s).first(4096)).size(), 1u);
}

TEST(GenSilence, OneSample) {
  EXPECT_EQ(gen_silence(spec_of(SignalKind::kSilence, 1.0 / 44100)), std::vector<Symbol>{0});
}

TEST(GenTone, QuarterRateFullScale) {
  GeneratorSpec s = spec_of(SignalKind::kTone, 12.0 / 44100);
  s.frequency = 44100 / 4.0;
  s.amplitude = 1.0;
  EXPECT_EQ(as_pcm(gen_tone(s)),
            (std::vector<std::int32_t>{0, 32767, 0, -32767, 0, 32767, 0, -32767, 0, 32767, 0, -32767}));
}

TEST(GenTone, TinyAmplitudeStaysWithinOneStep) {
  GeneratorSpec s = spec_of(SignalKind::kTone, 0.1);
  s.amplitude = 1.0 / 32767;
  for (auto v : as_pcm(gen_tone(s))) EXPECT_TRUE(v >= -1 && v <= 1);
}

TEST(GenTone, DefaultsAndRange) {
  const auto s = spec_of(SignalKind::kTone, 1);
  EXPECT_DOUBLE_EQ(s.resolved_amplitude(), 0.8);
  EXPECT_DOUBLE_EQ(s.frequency, 440.0);
  const auto pcm = as_pcm(gen_tone(s));
  EXPECT_EQ(*std::max_element(pcm.begin(), pcm.end()), 26214);  // round(0.8 * 32767)
  EXPECT_EQ(pcm[1], static_cast<std::int32_t>(std::round(0.8 * 32767 * std::sin(2 * M_PI * 440 / 44100))));
}

TEST(GenTone, RejectsInvalidSpecs) {
  GeneratorSpec s = spec_of(SignalKind::kTone, 1);
  s.frequency = 30000;
  EXPECT_THROW(gen_tone(s), Error);
  s.frequency = 22050;
  EXPECT_THROW(gen_tone(s), Error);
  s.frequency = 440;
  s.amplitude = 0.0;
  EXPECT_THROW(gen_tone(s), Error);
  s.amplitude = 1.5;
  EXPECT_THROW(gen_tone(s), Error);
  s.amplitude.reset();
  s.seconds = 0;
  EXPECT_THROW(gen_tone(s), Error);
  s.seconds = -1;
  EXPECT_THROW(gen_silence(s), Error);
}

TEST(GenPink, GoldenPrefixes) {
  GeneratorSpec s = spec_of(SignalKind::kPink, 10.0 / 44100);
  s.seed = 1;
  EXPECT_EQ(as_pcm(gen_pink(s)),
            (std::vector<std::int32_t>{419, 922, 967, 996, 1489, 2296, 1927, 1587, 2787, 2744}));
  s.seed = 42;
  EXPECT_EQ(as_pcm(gen_pink(s)), (std::vector<std::int32_t>{-2267, -3278, -3162, -2996, -3740, -2580,
                                                            -2537, -1563, -2134, -2649}));
}

TEST(GenPink, MatchesReferenceRecurrence) {
  GeneratorSpec s = spec_of(SignalKind::kPink, 10);
  s.seed = 42;
  const auto pcm = as_pcm(gen_pink(s));
  EXPECT_EQ(pcm, testing::reference_pink(42, 441000, 0.5));
  // Frozen checksums of the 10 s default corpus.
  EXPECT_EQ(std::accumulate(pcm.begin(), pcm.end(), std::int64_t{0}), 109535605);
  std::int64_t abs_sum = 0;
  for (auto v : pcm) abs_sum += std::abs(v);
  EXPECT_EQ(abs_sum, 840471761);
}

TEST(GenPink, DeterministicAndSeedSensitive) {
  GeneratorSpec s = spec_of(SignalKind::kPink, 1);
  s.seed = 9;
  EXPECT_EQ(gen_pink(s), gen_pink(s));
  auto t = s;
  t.seed = 10;
  EXPECT_NE(gen_pink(s), gen_pink(t));
}

TEST(GenPink, FullAmplitudeStaysInRange) {
  GeneratorSpec s = spec_of(SignalKind::kPink, 2);
  s.amplitude = 1.0;
  for (auto v : as_pcm(gen_pink(s))) {
    ASSERT_GE(v, -32768);
    ASSERT_LE(v, 32767);
  }
}

TEST(ParseSignalKind, Names) {
  EXPECT_EQ(parse_signal_kind("pink"), SignalKind::kPink);
  EXPECT_EQ(parse_signal_kind("tone"), SignalKind::kTone);
  EXPECT_EQ(parse_signal_kind("silence"), SignalKind::kSilence);
  EXPECT_FALSE(parse_signal_kind("brown").has_value());
}

#ifdef OBHS_HAVE_FFTW
TEST(GenPink, SpectralSlopeIsRoughlyOneOverF) {
  constexpr std::size_t kSegment = 4096;
  constexpr std::size_t kSegments = 64;  // 2^18 samples
  GeneratorSpec s = spec_of(SignalKind::kPink, static_cast<double>(kSegment * kSegments) / 44100);
  const auto pcm = as_pcm(gen_pink(s));
  ASSERT_GE(pcm.size(), kSegment * kSegments);

  std::vector<double> in(kSegment);
  std::vector<fftw_complex> out(kSegment / 2 + 1);
  fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(kSegment), in.data(), out.data(), FFTW_ESTIMATE);
  std::vector<double> power(kSegment / 2 + 1, 0.0);
  for (std::size_t seg = 0; seg < kSegments; ++seg) {
    for (std::size_t i = 0; i < kSegment; ++i) {
      const double hann = 0.5 - 0.5 * std::cos(2 * M_PI * i / (kSegment - 1));
      in[i] = pcm[seg * kSegment + i] * hann;
    }
    fftw_execute(plan);
    for (std::size_t k = 0; k < power.size(); ++k) power[k] += out[k][0] * out[k][0] + out[k][1] * out[k][1];
  }
  fftw_destroy_plan(plan);

  // Least-squares slope of log10(power) against log10(frequency).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t k = 1; k < power.size(); ++k) {
    const double f = 44100.0 * k / kSegment;
    if (f < 100 || f > 10000) continue;
    const double x = std::log10(f), y = std::log10(power[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  EXPECT_GE(slope, -1.6);
  EXPECT_LE(slope, -0.4);
}
#endif

}  // namespace
}  // namespace obhs
