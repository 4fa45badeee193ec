#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qseries/identities.hpp"

namespace qseries {

enum class Command { List, Verify, Expand, Bench };
enum class OutputFormat { Human, Json, Csv };

struct RunConfig {
  Command command = Command::List;
  /// Verify: identity names or "all". Expand: the single target.
  std::vector<std::string> names;
  int order = 30;
  int points = 3;
  std::uint64_t seed = 0;
  int degree_cap = 10;
  int slack = 8;
  OutputFormat output = OutputFormat::Human;
  /// 0 picks the hardware concurrency.
  int jobs = 0;
  bool timing = true;
  /// Verify: also run every SymbolicOK entry once with formal a and b.
  bool symbolic = false;
  /// name=value overrides: a, b ("formal" allowed), extras, integer parameters.
  std::map<std::string, std::string> sets;
  std::optional<std::string> output_file;
};

namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInsufficient = 3;
}  // namespace exit_code

/// Runs a parsed configuration against `reg`, writing the report to `out`
/// (or the output file) and diagnostics to `err`. Returns the exit status.
int run(const RunConfig& config, const Registry& reg, std::ostream& out, std::ostream& err);

/// Parses argv and runs. Usage errors return exit_code::kUsage.
int cli_main(int argc, const char* const* argv, const Registry& reg, std::ostream& out, std::ostream& err);

/// Exact "p/q" form used in every report.
std::string rat_string(const Rat& r);

}  // namespace qseries
