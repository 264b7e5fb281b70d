#include "commands.hpp"

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "distcol/certification.hpp"
#include "distcol/engine.hpp"
#include "distcol/errors.hpp"
#include "distcol/generators.hpp"
#include "distcol/latin.hpp"
#include "distcol/oracle.hpp"
#include "distcol/serialization.hpp"

namespace distcol::cli {

namespace fs = std::filesystem;

namespace {

std::string paint(const Streams& io, const char* code, const std::string& text) {
  return io.colour ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
}

void write_or_print(const fs::path& path, const std::string& text, Streams io) {
  if (path.empty()) {
    io.out << text << '\n';
  } else {
    write_text_file(path, text + "\n");
  }
}

}  // namespace

int cmd_solve(const fs::path& instance, const fs::path& out_path, Streams io) {
  DistortionInstance inst;
  try {
    inst = decode_instance(read_text_file(instance));
    if (inst.d != 3) {
      io.err << "error: solve supports d=3 only (file has d=" << inst.d << "); use `distcol oracle` instead\n";
      return kInvalidInput;
    }
  } catch (const InvalidInstance& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  }

  try {
    const EdgeColouring f = solve(inst);
    const auto violations = verify_colouring(inst, f);
    if (!violations.empty()) {
      const fs::path dump = out_path.empty() ? fs::path("distcol-diagnostic.json")
                                             : fs::path(out_path.string() + ".diagnostic.json");
      write_text_file(dump, encode_diagnostic(inst, f, "solver output failed verification"));
      io.err << "internal error: solver output failed verification (" << describe(violations.front())
             << "); diagnostic written to " << dump.string() << '\n';
      return kTheoremSentinel;
    }
    write_or_print(out_path, encode_colouring(f), io);
    return kOk;
  } catch (const TheoremViolation& ex) {
    const fs::path dump = out_path.empty() ? fs::path("distcol-diagnostic.json")
                                           : fs::path(out_path.string() + ".diagnostic.json");
    write_text_file(dump, ex.context().empty() ? encode_diagnostic(inst, EdgeColouring(inst.edges.size()), ex.what())
                                               : ex.context());
    io.err << "internal error: " << ex.what() << "; diagnostic written to " << dump.string() << '\n';
    return kTheoremSentinel;
  } catch (const InvalidInstance& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  }
}

int cmd_verify(const fs::path& instance, const fs::path& colouring, Streams io) {
  try {
    const DistortionInstance inst = decode_instance(read_text_file(instance));
    const EdgeColouring f = decode_colouring(read_text_file(colouring));
    if (f.size() != inst.edges.size()) {
      io.err << "error: colouring has " << f.size() << " entries, instance has " << inst.edges.size()
             << " edges\n";
      return kInvalidInput;
    }
    const auto violations = verify_colouring(inst, f);
    for (const Violation& v : violations) io.out << describe(v) << '\n';
    if (violations.empty()) {
      io.out << paint(io, "32", "proper") << '\n';
      return kOk;
    }
    return kFailed;
  } catch (const InvalidInstance& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  }
}

int cmd_oracle(const fs::path& instance, std::optional<int> colours, std::uint64_t budget, Streams io) {
  try {
    const DistortionInstance inst = decode_instance(read_text_file(instance), colours);
    const OracleResult result = exhaustive_solve(inst, budget);
    io.out << "status: " << to_string(result.status) << '\n' << "nodes: " << result.nodes << '\n';
    switch (result.status) {
      case OracleStatus::Found:
        io.out << encode_colouring(*result.witness) << '\n';
        return kOk;
      case OracleStatus::Exhausted:
        return kFailed;
      case OracleStatus::BudgetExceeded:
        return kBudgetExceeded;
    }
    return kFailed;
  } catch (const InvalidInstance& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  }
}

int cmd_gen(std::uint64_t seed, int size_a, int size_b, const std::string& mode, const fs::path& out_path,
            Streams io) {
  try {
    const DistortionInstance inst = random_instance(seed, size_a, size_b, parse_generator_mode(mode));
    write_or_print(out_path, encode_instance(inst), io);
    return kOk;
  } catch (const InvalidInstance& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  }
}

int cmd_latin(const fs::path& square, int deleted_row, Streams io) {
  try {
    const LatinSquare sq = LatinSquare::parse(read_text_file(square));
    if (sq.order() != 4) {
      io.err << "error: only order 4 supported (got order " << sq.order() << ")\n";
      return kInvalidInput;
    }
    const Transversal t = find_partial_transversal(sq, deleted_row);
    if (!is_transversal(sq, t)) {
      io.err << "internal error: produced cells are not a transversal\n";
      return kTheoremSentinel;
    }
    for (const TransversalCell& cell : t) io.out << cell.row << ' ' << cell.column << ' ' << cell.symbol << '\n';
    return kOk;
  } catch (const InvalidInstance& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  } catch (const TheoremViolation& ex) {
    io.err << "internal error: " << ex.what() << '\n';
    return kTheoremSentinel;
  }
}

int cmd_selftest(const fs::path& reproducer_path, Streams io) {
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (const SuiteResult& suite : run_selftest()) {
    io.out << (suite.passed ? paint(io, "32", "PASS") : paint(io, "31", "FAIL")) << "  " << suite.name << " ("
           << suite.cases << " cases): " << suite.detail << '\n';
    if (!suite.passed && all) {
      write_text_file(reproducer_path, suite.reproducer + "\n");
      io.out << "      reproducer written to " << reproducer_path.string() << '\n';
    }
    all = all && suite.passed;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  io.out << (all ? "selftest passed" : "selftest FAILED") << " in " << ms << " ms\n";
  return all ? kOk : kFailed;
}

int run(int argc, char** argv, Streams io) {
  CLI::App app{"distcol: 4-colouring bipartite multigraphs of maximum degree 3 under edge distortions"};
  app.require_subcommand(1);

  std::string instance, colouring, square, out, mode = "cubic";
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  int size_a = 10, size_b = 10, deleted_row = 0;
  std::optional<int> colours;

  auto* solve_cmd = app.add_subcommand("solve", "colour an instance (d=3) and write the colouring");
  solve_cmd->add_option("instance", instance, "instance JSON file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_option("--out", out, "colouring output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "check a colouring against an instance");
  verify_cmd->add_option("instance", instance, "instance JSON file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("colouring", colouring, "colouring JSON file")->required()->check(CLI::ExistingFile);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive search for any number of colours");
  oracle_cmd->add_option("instance", instance, "instance JSON file")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--colours", colours, "colour count (default: d+1 from the file)");
  oracle_cmd->add_option("--budget", budget, "node expansion budget");

  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded random instance");
  gen_cmd->add_option("--seed", seed, "generator seed");
  gen_cmd->add_option("--mode", mode, "cubic | subcubic | delay")
      ->check(CLI::IsMember({"cubic", "subcubic", "delay"}));
  gen_cmd->add_option("--size-a", size_a, "vertices in class A")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--size-b", size_b, "vertices in class B")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", out, "instance output file (default: stdout)");

  auto* latin_cmd = app.add_subcommand("latin", "size-3 transversal of a 4x4 Latin square");
  latin_cmd->add_option("square", square, "text file, one row per line")->required()->check(CLI::ExistingFile);
  latin_cmd->add_option("--deleted-row", deleted_row, "row left out of the reduction")->check(CLI::Range(0, 3));

  auto* selftest_cmd = app.add_subcommand("selftest", "run the exhaustive certification suites");
  std::string reproducer = "distcol-selftest-failure.json";
  selftest_cmd->add_option("--out", reproducer, "where a failing suite writes its reproducer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*solve_cmd) return cmd_solve(instance, out, io);
    if (*verify_cmd) return cmd_verify(instance, colouring, io);
    if (*oracle_cmd) return cmd_oracle(instance, colours, budget, io);
    if (*gen_cmd) return cmd_gen(seed, size_a, size_b, mode, out, io);
    if (*latin_cmd) return cmd_latin(square, deleted_row, io);
    if (*selftest_cmd) return cmd_selftest(reproducer, io);
  } catch (const std::exception& ex) {
    io.err << "error: " << ex.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace distcol::cli
