#pragma once

// Additive statistics of finite sets and the inclusion-exclusion lower bound
// on the expected number of distinct differences along a random cyclic
// arrangement, with a seeded Monte Carlo estimate of the same quantity.

#include <cstdint>
#include <random>
#include <vector>

#include "gpath/core.hpp"

namespace gpath {

/// Positive differences d of A with r(d) = #{(a, a') : a - a' = d} and
/// s3(d) = #{a : a - d, a + d in A}. The three vectors are parallel and
/// sorted by difference.
struct DiffStats {
  int n = 0;
  std::vector<Rational> positive_diffs;
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> s3;

  std::int64_t r_of(const Rational& d) const;
  std::int64_t s3_of(const Rational& d) const;
};

// Aggregates of the same counts, cheap enough for sets of a few thousand.
struct DiffSummary {
  int n = 0;
  std::int64_t distinct_diffs = 0;  // |(A-A)+|
  std::int64_t sum_r = 0;           // n(n-1)/2
  std::int64_t sum_r_squared = 0;
  std::int64_t sum_s3 = 0;
};

// Requires |A| >= 2.
DiffStats diff_stats(const RealSet& set);

DiffSummary diff_summary(const RealSet& set);

// #{(a, b, c, d) in A^4 : a + b = c + d}, from sum-representation counts.
std::int64_t additive_energy(const RealSet& set);

struct BoundReport {
  int n = 0;
  std::int64_t energy = 0;
  std::int64_t sum_s3 = 0;
  std::int64_t sum_r_r_minus_1 = 0;
  Rational term_main;       // 2 sum r / (n-1) == n
  Rational term_ap;         // 2 sum s3 / ((n-1)(n-2))
  Rational term_ap_lemma;   // same with sum s3 replaced by n^2/4
  Rational term_energy;     // 2 sum r(r-1) / (n(n-3)) == (E - 2n^2 + n) / (n(n-3))
  Rational bound_exact;     // term_main - term_ap - term_energy
  Rational bound_energy_form;  // term_main - term_ap_lemma - term_energy
  Rational c;               // E / n^2

  // bound_exact > n - 1: some arrangement has n distinct differences.
  bool certifies_cycle() const { return bound_exact > n - 1; }
};

// Requires |A| >= 4.
BoundReport expectation_bound(const RealSet& set);

struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t sum_distinct = 0;
  std::int64_t sum_distinct_squared = 0;
  Rational mean_distinct;
  Rational sample_variance;  // unbiased; 0 when trials == 1
  double sample_stddev = 0.0;
  int min_distinct = 0;
  int max_distinct = 0;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

// Trials are processed in blocks of this size; block b draws from
// std::mt19937_64 seeded with block_seed(seed, b).
inline constexpr std::uint64_t kTrialBlock = 4096;

// SplitMix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

// (b+1)-th output of a SplitMix64 stream whose state starts at `seed`.
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

// Uniform integer in [0, bound) by rejection on 64-bit draws.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound);

// Fisher-Yates: for i = size-1 .. 1 swap items[i] with items[uniform_below(i+1)].
void shuffle_indices(std::vector<int>& items, std::mt19937_64& gen);

// Requires |A| >= 3 and trials >= 1. workers == 0 picks the hardware
// concurrency; the report does not depend on the worker count.
TrialReport monte_carlo_distinct(const RealSet& set, std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers = 0);

struct SumSLemma {
  std::int64_t lhs = 0;  // sum over d > 0 of s3(d)
  Rational rhs;          // n^2 / 4
  bool ok = false;
};

SumSLemma check_sum_s_lemma(const RealSet& set);

}  // namespace gpath
