#pragma once

#include "bwrt/brieskorn.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bwrt::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitPrecisionFailure = 2,
  kExitUsage = 64,
};

/// Malformed or invalid invocation; what() is the user-facing message.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;
  std::optional<BrieskornTriple> p;
  std::optional<long> N;
  int order = 8;
  int terms = 2;
  int precision = 50;
  std::optional<long> pmax;
  std::string suite;
  std::string format = "json";
  std::string out;
  unsigned workers = 1;
  bool timing = false;
};

/// Parses arguments after the program name. Throws UsageError or HelpRequested.
Command parse(const std::vector<std::string>& args);

struct Report {
  /// Serialized JSON document, or CSV / text, exactly as printed.
  std::string rendered;
  int exit_code = kExitOk;
};

/// Runs a validated command and renders its report in cmd.format.
Report execute(const Command& cmd);

/// parse + execute + output; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bwrt::cli
