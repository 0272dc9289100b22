#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ucs/counts.hpp"
#include "ucs/enumerate.hpp"

namespace ucs::cli {

enum class Mode { count, emit_reps, report, merge };

struct RunConfig {
  int n = 0;
  Mode mode = Mode::count;
  /// emit-reps: prefix each line with |Aut| and a space.
  bool labeled = false;
  /// emit-reps: print the complementary Moore family instead.
  bool moore = false;
  /// emit-reps: only families with average member size <= n/2.
  bool sparse_only = false;
  std::vector<SplitSpec> splits;
  ReportFormat format = ReportFormat::tsv;
  /// Empty means standard output.
  std::string output;
  /// merge: TSV files produced by count runs.
  std::vector<std::string> inputs;
};

Mode parse_mode(std::string_view name);

/// "MOD/RES/DEPTH" or "MOD/RES" (depth 2). Throws std::invalid_argument.
SplitSpec parse_split(std::string_view text);

/// Throws std::invalid_argument when the configuration is inconsistent.
void validate(const RunConfig& config);

/// Runs one configuration, writing results to `out` unless config.output is
/// set. Returns the process exit status; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Exit status 0 on success.
int main(int argc, char** argv);

}  // namespace ucs::cli
