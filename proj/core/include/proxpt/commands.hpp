#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "proxpt/report.hpp"

namespace proxpt {

enum class Command { analyze, functions, verify, solve, demo_paper };
Command command_from_string(const std::string& name);
const char* to_string(Command command) noexcept;

/// Command-line surface. Unset optionals fall back to the instance file, then
/// to the library defaults.
struct RunOptions {
  std::optional<std::string> instance_path;
  std::optional<std::string> builtin;
  std::optional<std::size_t> size;
  std::string kind = "both";  // first | second | both
  std::optional<std::string> theta;
  std::optional<std::string> phi;
  std::optional<std::string> params;  // "a,b,c,h"
  std::optional<double> tol;
  std::optional<double> eps_conv;
  std::optional<std::size_t> max_iter;
  std::string p_property = "strict";
  std::string filter = "positive_distance";
  std::optional<std::string> u0;
  std::optional<std::string> report_path;
  bool exact_int = false;
  unsigned workers = 0;
  std::size_t max_violations = 20;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  int exit_code = kExitOk;
  Json report;       // machine-readable report (null on usage errors)
  std::string text;  // human-readable summary
};

/// Runs one command end to end. Input and usage problems produce exit code 2
/// and an error line instead of throwing. The report is also written to
/// `report_path` when set, including on exit code 1.
RunResult run_command(Command command, const RunOptions& options);

}  // namespace proxpt
