#pragma once

// Command-line surface: argument grammar, the subcommands and their
// structured output records.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpath/core.hpp"

namespace gpath::cli {

inline constexpr std::string_view kSchemaVersion = "1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitUsage = 2,
  kExitInternal = 70,
};

// Overrides the default search budget of the cycle and sweep commands.
inline constexpr const char* kBudgetEnv = "GPATH_BUDGET";
inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

inline constexpr int kSweepOracleMaxN = 13;

class UsageError : public Error {
 public:
  using Error::Error;
};

// Comma-separated rationals ("3", "-1/2") and integer ranges "a..b".
// Surrounding parentheses or braces are ignored.
std::vector<Rational> parse_list(std::string_view text);

// Inline list, or the path of a file holding one element (or range) per
// line; blank lines and lines starting with '#' are skipped.
RealSet parse_set(std::string_view text);

// "first,step"
std::pair<Rational, Rational> parse_ap(std::string_view text);

std::uint64_t default_budget();

// Runs one invocation. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace gpath::cli
