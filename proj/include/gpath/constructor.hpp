#pragma once

// Recursive construction of graceful permutations of [n] with a prescribed
// first element. Every output is verified before it is returned.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpath/core.hpp"

namespace gpath {

enum class Rule {
  BaseZigzag,
  BaseTable,
  Case1,
  Case2,
  Reflect,
  ShiftType1to2,
  ShiftType2to1,
  SpecialN1Mod4,
  SpecialN2Mod4,
};

std::string_view to_string(Rule r);

// One rule application. (n, s, want) is the sub-problem the step solves; the
// step's output starts at s.
struct TraceStep {
  Rule rule;
  int n;
  int s;
  std::optional<GoodVariant> want;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// Steps in post-order: a step appears after the steps producing its inputs,
// so the trace replays on a stack (see replay()).
struct ConstructionTrace {
  std::vector<TraceStep> steps;
};

std::string render(const TraceStep& step);

struct Construction {
  Permutation perm;
  ConstructionTrace trace;
};

struct BaseEntry {
  int n;
  int s;
  GoodVariant variant;
  std::vector<int> seq;
};

// Lexicographically first good permutation for each feasible (n, s, variant)
// with n <= 6. Regenerate with tools/gen_base_table.py.
const std::vector<BaseEntry>& base_table();
inline constexpr int kBaseTableMaxN = 6;

// (1, n, 2, n-1, ...)
Permutation zigzag(int n);

// b_i = n + 1 - a_i. Requires a good input; the output has the opposite type.
Permutation reflect(const Permutation& p);

// Odd positions -= floor(n/2), even positions += floor((n+1)/2).
// Requires a Type1-good input.
Permutation shift_type1_to_type2(const Permutation& p);

// Odd positions += floor(n/2), even positions -= floor((n+1)/2).
// Requires a Type2-good input.
Permutation shift_type2_to_type1(const Permutation& p);

// s* = (floor((n+1)/2) + 1) / 2, defined when floor((n+1)/2) is odd, i.e.
// n = 1 or 2 (mod 4).
std::optional<int> special_start(int n);

// n = 1 (mod 4), n >= 5, and s is s* or its mirror n + 1 - s*: no good
// permutation starts there.
bool is_exceptional_start(int n, int s);

// Good permutation of [n] starting at s, of the requested variant if given.
// Throws InfeasibleError for exceptional starts or a variant incompatible
// with s, PreconditionError for s outside [1, n].
Construction construct_good(int n, int s, std::optional<GoodVariant> want = std::nullopt);

// Graceful permutation of [n] starting at s; good unless s is exceptional.
Construction construct_path(int n, int s);

// Rebuilds the permutation described by a trace.
Permutation replay(const ConstructionTrace& trace);

}  // namespace gpath
