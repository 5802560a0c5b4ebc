#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "waring/verify.hpp"

namespace waring::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// "1,0,2" -> {1, 0, 2}. Throws UsageError on anything but comma-separated
/// nonnegative integers.
std::vector<unsigned> parse_exponents(std::string_view text);

/// "1,2|1,2" -> {{1, 2}, {1, 2}}.
std::vector<std::vector<unsigned>> parse_blocks(std::string_view text);

/// "4:8" -> [4, 8]; a single "5" -> [5, 5].
Range parse_range(std::string_view text);

/// 1 when the report found a counterexample that is not a documented exception, else 0.
int exit_code_for(const VerificationReport& report);

/// Runs one invocation. `args` excludes the program name. Reports go to `out`
/// (or --out FILE), diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 unexpected counterexample, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace waring::cli
