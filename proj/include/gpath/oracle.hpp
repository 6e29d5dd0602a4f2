#pragma once

// Exhaustive backtracking searches used as ground truth for the constructor
// and for the probabilistic bounds. Nothing in here depends on the
// constructor.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gpath/core.hpp"

namespace gpath {

// max_nodes == 0 means unlimited. A node is one partial sequence visited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
};

enum class SearchStatus {
  Complete,         // whole tree explored
  Stopped,          // visitor asked to stop
  BudgetExhausted,  // node limit hit; results are partial
};

struct SearchStats {
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
};

inline constexpr int kMaxSearchN = 62;

// Return false to stop the enumeration.
using PathVisitor = std::function<bool(std::span<const int>)>;

// Visits every graceful permutation of [n] (starting at `start` if given) in
// lexicographic order.
SearchStats enumerate_graceful_paths(int n, std::optional<int> start, const PathVisitor& visit,
                                     SearchBudget budget = {});

// Collected form of enumerate_graceful_paths; throws BudgetExhausted.
std::vector<Permutation> graceful_paths(int n, std::optional<int> start, SearchBudget budget = {});

// Throws BudgetExhausted.
bool exists_graceful_path(int n, int start, SearchBudget budget = {});

// Any good variant when `variant` is empty. Throws BudgetExhausted.
bool exists_good(int n, int start, std::optional<GoodVariant> variant, SearchBudget budget = {});

struct ParityCensus {
  int n = 0;
  // counts[start % 2][end % 2]
  std::array<std::array<std::uint64_t, 2>, 2> counts{};

  std::uint64_t total() const;
  std::uint64_t equal_parity() const { return counts[0][0] + counts[1][1]; }
  std::uint64_t opposite_parity() const { return counts[0][1] + counts[1][0]; }
};

// Throws BudgetExhausted.
ParityCensus parity_census(int n, SearchBudget budget = {});

enum class CycleOutcome { Found, ProvenNone, BudgetExhausted };

std::string_view to_string(CycleOutcome o);

struct CycleResult {
  CycleOutcome outcome = CycleOutcome::ProvenNone;
  std::vector<Rational> cycle;  // set when outcome == Found
  std::uint64_t nodes = 0;
};

// Cyclic ordering of the set with all n differences (wrap-around included)
// distinct. The returned cycle starts at the smallest element and its second
// element is smaller than its last. Requires |set| >= 3.
CycleResult graceful_cycle_search(const RealSet& set, SearchBudget budget = {});

// Integer sets only: diameter <= n, exactly n positive differences and
// n = 1, 2 (mod 4). Any graceful cycle would then use {1..n}, whose sum is odd.
bool cycle_parity_obstructed(const RealSet& set);

inline constexpr int kExactMaxSize = 8;

// Calls visit(order) for one representative of every circular arrangement of
// {0..n-1} up to rotation and reflection: order[0] == 0, order[1] < order[n-1].
void for_each_circular_class(int n, const std::function<void(std::span<const int>)>& visit);

// E|d(a)| over uniformly random circular arrangements of the set, by full
// enumeration. Requires 3 <= |set| <= 8.
Rational exact_expected_distinct(const RealSet& set);

// P(d in d(a)) over the same distribution.
Rational exact_prob_diff_present(const RealSet& set, const Rational& d);

}  // namespace gpath
