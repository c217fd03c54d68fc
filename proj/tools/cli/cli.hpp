#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace prabhakar::cli {

/// Malformed command line: unknown flag, missing value, bad number or name.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { Eval, Apply, Solve, Crosscheck, Figure1 };

const char* to_string(Subcommand s);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kParse = 2;
inline constexpr int kDomain = 3;
inline constexpr int kConvergence = 4;
}  // namespace exit_code

struct RunConfig {
  Subcommand subcommand = Subcommand::Eval;
  /// Flag name without the leading dashes -> raw value.
  std::map<std::string, std::string> parameters;
  std::optional<std::string> output_path;
  int precision = 12;

  bool has(const std::string& key) const { return parameters.count(key) != 0; }
  /// Finite double; throws UsageError if the value does not parse.
  double number(const std::string& key, double fallback) const;
  double number(const std::string& key) const;
  long integer(const std::string& key, long fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
  std::string text(const std::string& key) const;
};

/// Parses argv-style arguments (without the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes a parsed config, writing CSV to config.output_path or out and a
/// single `error: <kind>: <message>` line to err on failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, with --help handling and exit-code mapping.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prabhakar::cli
