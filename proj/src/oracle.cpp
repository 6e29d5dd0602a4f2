#include "gpath/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gpath {

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

void require_search_size(int n) {
  if (n < 1 || n > kMaxSearchN) {
    throw PreconditionError("search size must lie in [1, " + std::to_string(kMaxSearchN) + "]");
  }
}

// Backtracking over [n] with used-value and used-difference bitmasks.
// `allowed(position, value)` filters candidates per 1-indexed position.
template <typename Allowed>
class PathSearch {
 public:
  PathSearch(int n, SearchBudget budget, Allowed allowed, const PathVisitor& visit)
      : n_(n), budget_(budget), allowed_(allowed), visit_(visit) {
    seq_.reserve(static_cast<std::size_t>(n));
  }

  SearchStats run(std::optional<int> start) {
    for (int v = 1; v <= n_; ++v) {
      if (start && v != *start) continue;
      if (!allowed_(1, v)) continue;
      if (!place(v, 0)) break;
    }
    return stats_;
  }

 private:
  // Returns false when the search must unwind.
  bool place(int v, Mask diff_bit) {
    if (budget_.max_nodes != 0 && stats_.nodes >= budget_.max_nodes) {
      stats_.status = SearchStatus::BudgetExhausted;
      return false;
    }
    ++stats_.nodes;
    seq_.push_back(v);
    used_ |= bit(v);
    diffs_ |= diff_bit;
    bool keep_going = true;
    if (static_cast<int>(seq_.size()) == n_) {
      if (!visit_(seq_)) {
        stats_.status = SearchStatus::Stopped;
        keep_going = false;
      }
    } else {
      const int position = static_cast<int>(seq_.size()) + 1;
      for (int w = 1; w <= n_ && keep_going; ++w) {
        if (used_ & bit(w)) continue;
        const Mask d = bit(std::abs(w - v));
        if (diffs_ & d) continue;
        if (!allowed_(position, w)) continue;
        keep_going = place(w, d);
      }
    }
    seq_.pop_back();
    used_ &= ~bit(v);
    diffs_ &= ~diff_bit;
    return keep_going;
  }

  int n_;
  SearchBudget budget_;
  Allowed allowed_;
  const PathVisitor& visit_;
  std::vector<int> seq_;
  Mask used_ = 0;
  Mask diffs_ = 0;
  SearchStats stats_;
};

template <typename Allowed>
SearchStats run_search(int n, std::optional<int> start, SearchBudget budget, Allowed allowed,
                       const PathVisitor& visit) {
  require_search_size(n);
  if (start && (*start < 1 || *start > n)) throw PreconditionError("start outside [1, n]");
  PathSearch<Allowed> search(n, budget, allowed, visit);
  return search.run(start);
}

void throw_if_exhausted(const SearchStats& stats) {
  if (stats.status == SearchStatus::BudgetExhausted) {
    throw BudgetExhausted("search budget exhausted after " + std::to_string(stats.nodes) +
                          " nodes");
  }
}

bool exists_with(int n, int start, SearchBudget budget, GoodVariant v) {
  const int ceil_mid = (n + 2) / 2;
  const int floor_mid = (n + 1) / 2;
  auto allowed = [=](int position, int value) {
    const bool odd = position % 2 == 1;
    if (v == GoodVariant::Type1) return odd ? value >= ceil_mid : value < ceil_mid;
    return odd ? value <= floor_mid : value > floor_mid;
  };
  bool found = false;
  const SearchStats stats = run_search(n, start, budget, allowed, [&](std::span<const int>) {
    found = true;
    return false;
  });
  if (!found) throw_if_exhausted(stats);
  return found;
}

constexpr auto kAnyPosition = [](int, int) { return true; };

int count_distinct(std::vector<std::int64_t>& diffs) {
  std::sort(diffs.begin(), diffs.end());
  return static_cast<int>(std::unique(diffs.begin(), diffs.end()) - diffs.begin());
}

void require_exact_size(const RealSet& set) {
  if (set.n() < 3) throw DegenerateInput("circular arrangements need at least three elements");
  if (set.n() > kExactMaxSize) {
    throw SizeLimitExceeded("exact enumeration limited to sets of size " +
                            std::to_string(kExactMaxSize));
  }
}

}  // namespace

SearchStats enumerate_graceful_paths(int n, std::optional<int> start, const PathVisitor& visit,
                                     SearchBudget budget) {
  return run_search(n, start, budget, kAnyPosition, visit);
}

std::vector<Permutation> graceful_paths(int n, std::optional<int> start, SearchBudget budget) {
  std::vector<Permutation> out;
  const SearchStats stats = enumerate_graceful_paths(
      n, start,
      [&](std::span<const int> seq) {
        out.emplace_back(std::vector<int>(seq.begin(), seq.end()));
        return true;
      },
      budget);
  throw_if_exhausted(stats);
  return out;
}

bool exists_graceful_path(int n, int start, SearchBudget budget) {
  bool found = false;
  const SearchStats stats = enumerate_graceful_paths(
      n, start,
      [&](std::span<const int>) {
        found = true;
        return false;
      },
      budget);
  if (!found) throw_if_exhausted(stats);
  return found;
}

bool exists_good(int n, int start, std::optional<GoodVariant> variant, SearchBudget budget) {
  if (variant) return exists_with(n, start, budget, *variant);
  return exists_with(n, start, budget, GoodVariant::Type1) ||
         exists_with(n, start, budget, GoodVariant::Type2);
}

std::uint64_t ParityCensus::total() const {
  return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

ParityCensus parity_census(int n, SearchBudget budget) {
  ParityCensus census;
  census.n = n;
  const SearchStats stats = enumerate_graceful_paths(
      n, std::nullopt,
      [&](std::span<const int> seq) {
        ++census.counts[static_cast<std::size_t>(seq.front() % 2)]
                       [static_cast<std::size_t>(seq.back() % 2)];
        return true;
      },
      budget);
  throw_if_exhausted(stats);
  return census;
}

std::string_view to_string(CycleOutcome o) {
  switch (o) {
    case CycleOutcome::Found: return "found";
    case CycleOutcome::ProvenNone: return "proven-none";
    case CycleOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

CycleResult graceful_cycle_search(const RealSet& set, SearchBudget budget) {
  const int n = set.n();
  if (n < 3) throw DegenerateInput("cycle search needs at least three elements");
  const IntegerImage image = set.integer_image();
  const std::vector<std::int64_t>& x = image.values;

  CycleResult result;
  std::vector<int> order{0};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;
  std::vector<std::int64_t> diffs;  // differences along the partial path
  bool exhausted = false;

  auto diff_used = [&diffs](std::int64_t d) {
    return std::find(diffs.begin(), diffs.end(), d) != diffs.end();
  };

  std::function<bool()> extend = [&]() -> bool {
    if (budget.max_nodes != 0 && result.nodes >= budget.max_nodes) {
      exhausted = true;
      return true;
    }
    ++result.nodes;
    const int last = order.back();
    if (static_cast<int>(order.size()) == n) {
      if (order[1] > order.back()) return false;
      const std::int64_t wrap = x[static_cast<std::size_t>(last)] - x[0];
      return !diff_used(wrap);
    }
    for (int next = 1; next < n; ++next) {
      if (used[static_cast<std::size_t>(next)]) continue;
      const std::int64_t d = std::abs(x[static_cast<std::size_t>(next)] - x[static_cast<std::size_t>(last)]);
      if (diff_used(d)) continue;
      used[static_cast<std::size_t>(next)] = true;
      order.push_back(next);
      diffs.push_back(d);
      if (extend()) return true;
      diffs.pop_back();
      order.pop_back();
      used[static_cast<std::size_t>(next)] = false;
    }
    return false;
  };

  const bool stop = extend();
  if (exhausted) {
    result.outcome = CycleOutcome::BudgetExhausted;
  } else if (stop) {
    result.outcome = CycleOutcome::Found;
    for (int idx : order) result.cycle.push_back(set.elements()[static_cast<std::size_t>(idx)]);
    if (!is_graceful_cycle(std::span<const Rational>(result.cycle))) {
      throw InternalError("cycle search returned an invalid cycle");
    }
  } else {
    result.outcome = CycleOutcome::ProvenNone;
  }
  return result;
}

bool cycle_parity_obstructed(const RealSet& set) {
  if (!set.all_integers()) throw PreconditionError("parity obstruction is defined for integer sets");
  const int n = set.n();
  if (n < 1) return false;
  const auto elems = set.elements();
  if (elems.back() - elems.front() > n) return false;
  std::set<Rational> positive;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) positive.insert(elems[j] - elems[i]);
  }
  return static_cast<int>(positive.size()) == n && (n % 4 == 1 || n % 4 == 2);
}

void for_each_circular_class(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 3) throw DegenerateInput("circular classes need n >= 3");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    if (order[1] < order.back()) visit(order);
  } while (std::next_permutation(order.begin() + 1, order.end()));
}

Rational exact_expected_distinct(const RealSet& set) {
  require_exact_size(set);
  const IntegerImage image = set.integer_image();
  const auto& x = image.values;
  std::int64_t total = 0;
  std::int64_t classes = 0;
  std::vector<std::int64_t> diffs;
  for_each_circular_class(set.n(), [&](std::span<const int> order) {
    diffs.clear();
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::size_t j = (i + 1) % order.size();
      diffs.push_back(std::abs(x[static_cast<std::size_t>(order[j])] - x[static_cast<std::size_t>(order[i])]));
    }
    total += count_distinct(diffs);
    ++classes;
  });
  return Rational(total, classes);
}

Rational exact_prob_diff_present(const RealSet& set, const Rational& d) {
  require_exact_size(set);
  const IntegerImage image = set.integer_image();
  const Rational scaled = d * image.scale;
  if (d <= 0 || boost::multiprecision::denominator(scaled) != 1) return Rational(0);
  const BigInt target_big = boost::multiprecision::numerator(scaled);
  if (target_big > image.values.back()) return Rational(0);
  const auto target = static_cast<std::int64_t>(target_big);
  const auto& x = image.values;
  std::int64_t hits = 0;
  std::int64_t classes = 0;
  for_each_circular_class(set.n(), [&](std::span<const int> order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::size_t j = (i + 1) % order.size();
      if (std::abs(x[static_cast<std::size_t>(order[j])] - x[static_cast<std::size_t>(order[i])]) == target) {
        ++hits;
        break;
      }
    }
    ++classes;
  });
  return Rational(hits, classes);
}

}  // namespace gpath
