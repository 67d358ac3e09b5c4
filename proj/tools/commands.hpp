#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bcn/assr.hpp"

namespace bcn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kCapExceeded = 3,
};

enum class OutputFormat { kText, kJson, kCsv };

struct AnalysisConfig {
  // Network file; "-" reads standard input.
  std::string input = "-";
  OutputFormat format = OutputFormat::kText;
  std::size_t horizon = 10;
  std::uint64_t seed = 0;
  unsigned cap_bits = kDefaultCapBits;
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

// Individual subcommands. They throw bcn::Error subclasses on bad input;
// run() maps those to exit codes.
void cmd_compile(const AnalysisConfig& config, std::istream& in, std::ostream& out);
void cmd_entropy(const AnalysisConfig& config, std::istream& in, std::ostream& out);
void cmd_check_max(const AnalysisConfig& config, std::istream& in, std::ostream& out);
void cmd_decompose(const AnalysisConfig& config, std::istream& in, std::ostream& out);
void cmd_count(const AnalysisConfig& config, std::istream& in, std::ostream& out);
void cmd_export_dot(const AnalysisConfig& config, std::istream& in, std::ostream& out);
void cmd_random(unsigned n, unsigned m, const AnalysisConfig& config, std::ostream& out);

struct ReduceOptions {
  // Comma-separated variable order; empty means order of first occurrence.
  std::string variables;
  bool dimacs = false;
  bool verify = false;
  // Network destination; empty writes it to `out`.
  std::string output;
};

void cmd_reduce_sat(const AnalysisConfig& config, const ReduceOptions& options,
                    std::istream& in, std::ostream& out);

}  // namespace bcn::cli
