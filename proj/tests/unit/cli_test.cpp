#include "commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "obhs/file_io.hpp"
#include "obhs/wav.hpp"

namespace obhs::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("obhs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int obhs(std::vector<std::string> args) {
    args.insert(args.begin(), "obhs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GenSilenceSize) {
  ASSERT_EQ(obhs({"gen", "silence", "--out", path("s.wav")}), 0) << err_.str();
  EXPECT_EQ(fs::file_size(path("s.wav")), 882044u);
}

TEST_F(CliTest, EncodeDecodeRoundTrip) {
  ASSERT_EQ(obhs({"gen", "silence", "--out", path("s.wav")}), 0);
  ASSERT_EQ(obhs({"encode", path("s.wav"), path("s.obhs")}), 0) << err_.str();
  EXPECT_NE(out_.str().find("compressed_bytes=55905"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("ratio_pct=6.34"), std::string::npos);
  EXPECT_EQ(fs::file_size(path("s.obhs")), 55905u);
  ASSERT_EQ(obhs({"decode", path("s.obhs"), "--out", path("back.wav")}), 0) << err_.str();
  EXPECT_EQ(read_file(path("back.wav")), read_file(path("s.wav")));
}

TEST_F(CliTest, EncodeDefaultsOutputExtensionAndParallel) {
  ASSERT_EQ(obhs({"gen", "tone", "--seconds", "1", "--amplitude", "0.01", "--out", path("t.wav")}), 0);
  ASSERT_EQ(obhs({"encode", path("t.wav")}), 0);
  ASSERT_EQ(obhs({"encode", path("t.wav"), "--out", path("p.obhs"), "--parallel"}), 0);
  EXPECT_EQ(read_file(path("t.obhs")), read_file(path("p.obhs")));
}

TEST_F(CliTest, NoiseIsBoundedByFallback) {
  ASSERT_EQ(obhs({"gen", "pink", "--amplitude", "1", "--seconds", "2", "--out", path("n.wav")}), 0);
  ASSERT_EQ(obhs({"encode", path("n.wav"), path("n.obhs"), "--block-size", "1024"}), 0);
  const auto samples = (fs::file_size(path("n.wav")) - 44) / 2;
  const auto blocks = (samples + 1023) / 1024;
  EXPECT_LE(fs::file_size(path("n.obhs")), 24 + 3 * blocks + 2 * samples);
}

TEST_F(CliTest, MissingInputLeavesNoOutput) {
  EXPECT_EQ(obhs({"encode", path("nope.wav"), path("x.obhs")}), kExitIo);
  EXPECT_FALSE(fs::exists(path("x.obhs")));
  EXPECT_FALSE(fs::exists(path("x.obhs.tmp")));
}

TEST_F(CliTest, TruncatedStreamNamesBlock) {
  ASSERT_EQ(obhs({"gen", "silence", "--seconds", "1", "--out", path("s.wav")}), 0);
  ASSERT_EQ(obhs({"encode", path("s.wav"), path("s.obhs")}), 0);
  auto bytes = read_file(path("s.obhs"));
  bytes.resize(bytes.size() - 100);
  write_file_atomic(path("cut.obhs"), bytes);
  EXPECT_EQ(obhs({"decode", path("cut.obhs"), path("cut.wav")}), kExitCorrupt);
  EXPECT_NE(err_.str().find("(block 10)"), std::string::npos) << err_.str();
  EXPECT_NE(err_.str().find("byte offset"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("cut.wav")));
}

TEST_F(CliTest, VersionTwoIsUnsupported) {
  ASSERT_EQ(obhs({"gen", "silence", "--seconds", "0.1", "--out", path("s.wav")}), 0);
  ASSERT_EQ(obhs({"encode", path("s.wav"), path("s.obhs")}), 0);
  auto bytes = read_file(path("s.obhs"));
  bytes[4] = 2;
  write_file_atomic(path("v2.obhs"), bytes);
  EXPECT_EQ(obhs({"decode", path("v2.obhs"), path("v2.wav")}), kExitCorrupt);
  EXPECT_NE(err_.str().find("unsupported format"), std::string::npos);
}

TEST_F(CliTest, VerifyReportsReduction) {
  ASSERT_EQ(obhs({"gen", "silence", "--out", path("s.wav")}), 0);
  ASSERT_EQ(obhs({"verify", path("s.wav")}), 0) << err_.str();
  EXPECT_NE(out_.str().find("reduction_pct=93.66"), std::string::npos) << out_.str();
  ASSERT_EQ(obhs({"gen", "pink", "--out", path("p.wav")}), 0);
  EXPECT_EQ(obhs({"verify", path("p.wav")}), 0);
}

TEST_F(CliTest, VerifyOneSampleWav) {
  std::vector<std::uint8_t> wav;
  write_wav({44100, 1, 16}, std::vector<Symbol>{1234}, wav);
  write_file_atomic(path("one.wav"), wav);
  EXPECT_EQ(obhs({"verify", path("one.wav")}), 0) << err_.str();
}

TEST_F(CliTest, GenIsDeterministicAndValidates) {
  ASSERT_EQ(obhs({"gen", "pink", "--seed", "42", "--out", path("a.wav")}), 0);
  ASSERT_EQ(obhs({"gen", "pink", "--seed", "42", "--out", path("b.wav")}), 0);
  EXPECT_EQ(read_file(path("a.wav")), read_file(path("b.wav")));
  EXPECT_EQ(obhs({"gen", "tone", "--frequency", "30000", "--out", path("bad.wav")}), kExitUsage);
  EXPECT_FALSE(fs::exists(path("bad.wav")));
  EXPECT_EQ(obhs({"gen", "brown", "--out", path("bad.wav")}), kExitUsage);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(obhs({}), kExitUsage);
  EXPECT_EQ(obhs({"encode"}), kExitUsage);
  EXPECT_EQ(obhs({"encode", "x.wav", "--block-size", "100"}), kExitUsage);
  EXPECT_EQ(obhs({"--help"}), kExitOk);
}

TEST_F(CliTest, BenchWritesCsvAndLatency) {
  ASSERT_EQ(obhs({"gen", "tone", "--seconds", "0.5", "--amplitude", "0.003", "--out", path("r.wav")}), 0);
  ASSERT_EQ(obhs({"bench", "--seconds", "1", "--out", path("b.csv"), path("r.wav")}), 0) << err_.str();
  std::ifstream in(path("b.csv"));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], std::string(kBenchCsvHeader));
  EXPECT_EQ(lines[1].rfind("silence,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("r,", 0), 0u);
  EXPECT_NE(out_.str().find("buffering_latency_ms=92.88"), std::string::npos);
}

TEST_F(CliTest, BenchFailureLeavesNoCsv) {
  EXPECT_EQ(obhs({"bench", "--seconds", "0.1", "--out", path("b.csv"), path("missing.wav")}), kExitIo);
  EXPECT_FALSE(fs::exists(path("b.csv")));
}

}  // namespace
}  // namespace obhs::cli
