#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  kExhausted = 2,  ///< evaluation budget exceeded or search ran out
};

/// Environment variable that overrides the default enumeration budget.
inline constexpr const char* kBudgetEnv = "CYCLO_EVAL_BUDGET";

struct CommandConfig {
  std::string subcommand;
  int p = 0;
  int n = 0;
  std::string a;  ///< element JSON, or @path to a file holding it
  std::string b;
  std::string eps;
  std::string mode = "exhaustive";
  std::string what;
  std::string format = "json";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  unsigned threads = 0;
  int max_n = 1000;
};

/// Runs one subcommand. args excludes the program name. The payload goes to
/// out, diagnostics to err; the return value is the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
