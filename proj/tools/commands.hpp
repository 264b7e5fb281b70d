#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace distcol::cli {

// Exit statuses (stable contract).
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;          // verify: violations; oracle: proven-unsat; selftest: failure
inline constexpr int kInvalidInput = 2;
inline constexpr int kTheoremSentinel = 3;
inline constexpr int kBudgetExceeded = 4;

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool colour = false;
};

/// Writes the colouring to `out_path` (stdout when empty). On a theorem
/// sentinel the diagnostic goes to `<out_path>.diagnostic.json`, or
/// `distcol-diagnostic.json` when writing to stdout.
int cmd_solve(const std::filesystem::path& instance, const std::filesystem::path& out_path, Streams io);

int cmd_verify(const std::filesystem::path& instance, const std::filesystem::path& colouring, Streams io);

int cmd_oracle(const std::filesystem::path& instance, std::optional<int> colours, std::uint64_t budget,
               Streams io);

int cmd_gen(std::uint64_t seed, int size_a, int size_b, const std::string& mode,
            const std::filesystem::path& out_path, Streams io);

int cmd_latin(const std::filesystem::path& square, int deleted_row, Streams io);

/// Failing suites dump their reproducer to `reproducer_path`.
int cmd_selftest(const std::filesystem::path& reproducer_path, Streams io);

int run(int argc, char** argv, Streams io);

}  // namespace distcol::cli
