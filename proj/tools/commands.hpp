#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "obhs/bench.hpp"
#include "obhs/error.hpp"
#include "obhs/signals.hpp"

namespace obhs::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitCorrupt = 3,
  kExitMismatch = 4,
};

int exit_code_for(ErrorKind kind);

struct EncodeArgs {
  std::filesystem::path input;
  std::filesystem::path output;
  std::uint32_t block_size = kDefaultBlockSize;
  bool parallel = false;
};

int cmd_encode(const EncodeArgs& args, std::ostream& out, std::ostream& err);
int cmd_decode(const std::filesystem::path& input, const std::filesystem::path& output,
               std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& input, std::uint32_t block_size, bool parallel,
               std::ostream& out, std::ostream& err);
int cmd_gen(const GeneratorSpec& spec, const std::filesystem::path& output, std::ostream& out,
            std::ostream& err);
int cmd_bench(const BenchConfig& config, const std::filesystem::path& csv,
              const std::vector<std::filesystem::path>& real_audio, std::ostream& out,
              std::ostream& err);

// Parses argv and dispatches to a command. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace obhs::cli
