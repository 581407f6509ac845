#pragma once

#include <string>
#include <vector>

namespace hqp::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitResourceExhausted = 2;
inline constexpr int kExitFalse = 3;

struct Outcome {
  int exit_code = kExitError;
  std::string out;  // JSON document (or help text)
  std::string err;  // timings and diagnostics
};

/// Runs one invocation; `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace hqp::cli
