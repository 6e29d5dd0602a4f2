#include "gpath/stats.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace gpath {

namespace {

// Difference counts on the integer image: sorted distinct positive
// differences with parallel r and s3 columns.
struct IntCounts {
  std::vector<std::int64_t> diffs;
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> s3;
};

IntCounts int_counts(const std::vector<std::int64_t>& x) {
  IntCounts out;
  const std::size_t n = x.size();
  std::vector<std::int64_t> all;
  all.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) all.push_back(x[j] - x[i]);
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    out.diffs.push_back(all[i]);
    out.r.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  out.s3.assign(out.diffs.size(), 0);
  // x is ascending: for each middle x[j] and lower x[i], look for 2x[j] - x[i].
  for (std::size_t j = 1; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t d = x[j] - x[i];
      if (std::binary_search(x.begin() + static_cast<std::ptrdiff_t>(j) + 1, x.end(), x[j] + d)) {
        const auto pos = std::lower_bound(out.diffs.begin(), out.diffs.end(), d) - out.diffs.begin();
        ++out.s3[static_cast<std::size_t>(pos)];
      }
    }
  }
  return out;
}

std::int64_t lookup(const DiffStats& st, const std::vector<std::int64_t>& column, const Rational& d) {
  const auto it = std::lower_bound(st.positive_diffs.begin(), st.positive_diffs.end(), d);
  if (it == st.positive_diffs.end() || *it != d) return 0;
  return column[static_cast<std::size_t>(it - st.positive_diffs.begin())];
}

int cyclic_distinct(const std::vector<std::int64_t>& x, const std::vector<int>& order,
                    std::vector<std::int64_t>& scratch) {
  scratch.clear();
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    scratch.push_back(std::abs(x[static_cast<std::size_t>(order[j])] - x[static_cast<std::size_t>(order[i])]));
  }
  std::sort(scratch.begin(), scratch.end());
  return static_cast<int>(std::unique(scratch.begin(), scratch.end()) - scratch.begin());
}

struct BlockResult {
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  int min = 0;
  int max = 0;
};

BlockResult run_block(const std::vector<std::int64_t>& x, std::uint64_t seed, std::uint64_t block,
                      std::uint64_t trials) {
  std::mt19937_64 gen(block_seed(seed, block));
  std::vector<int> order(x.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::int64_t> scratch;
  scratch.reserve(x.size());
  BlockResult res;
  res.min = static_cast<int>(x.size()) + 1;
  for (std::uint64_t t = 0; t < trials; ++t) {
    shuffle_indices(order, gen);
    const int k = cyclic_distinct(x, order, scratch);
    res.sum += k;
    res.sum_sq += static_cast<std::int64_t>(k) * k;
    res.min = std::min(res.min, k);
    res.max = std::max(res.max, k);
  }
  return res;
}

}  // namespace

std::int64_t DiffStats::r_of(const Rational& d) const { return lookup(*this, r, d); }
std::int64_t DiffStats::s3_of(const Rational& d) const { return lookup(*this, s3, d); }

DiffStats diff_stats(const RealSet& set) {
  if (set.n() < 2) throw DegenerateInput("difference statistics need at least two elements");
  const IntegerImage image = set.integer_image();
  const IntCounts counts = int_counts(image.values);
  DiffStats st;
  st.n = set.n();
  st.positive_diffs.reserve(counts.diffs.size());
  for (std::int64_t d : counts.diffs) st.positive_diffs.push_back(image.diff_to_original(d));
  st.r = counts.r;
  st.s3 = counts.s3;
  return st;
}

DiffSummary diff_summary(const RealSet& set) {
  const IntCounts counts = int_counts(set.integer_image().values);
  DiffSummary s;
  s.n = set.n();
  s.distinct_diffs = static_cast<std::int64_t>(counts.diffs.size());
  for (std::size_t i = 0; i < counts.diffs.size(); ++i) {
    s.sum_r += counts.r[i];
    s.sum_r_squared += counts.r[i] * counts.r[i];
    s.sum_s3 += counts.s3[i];
  }
  return s;
}

std::int64_t additive_energy(const RealSet& set) {
  const std::vector<std::int64_t> x = set.integer_image().values;
  std::vector<std::int64_t> sums;
  sums.reserve(x.size() * x.size());
  for (std::int64_t a : x) {
    for (std::int64_t b : x) sums.push_back(a + b);
  }
  std::sort(sums.begin(), sums.end());
  std::int64_t energy = 0;
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    const auto reps = static_cast<std::int64_t>(j - i);
    energy += reps * reps;
    i = j;
  }
  return energy;
}

BoundReport expectation_bound(const RealSet& set) {
  const int n = set.n();
  if (n < 4) throw PreconditionError("the expectation bound needs at least four elements");
  const DiffSummary s = diff_summary(set);
  BoundReport b;
  b.n = n;
  b.energy = additive_energy(set);
  b.sum_s3 = s.sum_s3;
  b.sum_r_r_minus_1 = s.sum_r_squared - s.sum_r;
  const Rational nn(n);
  b.term_main = Rational(2 * s.sum_r) / (nn - 1);
  b.term_ap = Rational(2 * s.sum_s3) / ((nn - 1) * (nn - 2));
  b.term_ap_lemma = (nn * nn / 2) / ((nn - 1) * (nn - 2));
  b.term_energy = Rational(2 * b.sum_r_r_minus_1) / (nn * (nn - 3));
  b.bound_exact = b.term_main - b.term_ap - b.term_energy;
  const Rational energy_term = (Rational(b.energy) - 2 * nn * nn + nn) / (nn * (nn - 3));
  b.bound_energy_form = nn - b.term_ap_lemma - energy_term;
  b.c = Rational(b.energy) / (nn * nn);
  return b;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  return splitmix64(seed + (block + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  std::uint64_t x = gen();
  while (x < threshold) x = gen();
  return x % bound;
}

void shuffle_indices(std::vector<int>& items, std::mt19937_64& gen) {
  for (std::size_t i = items.size(); i-- > 1;) {
    const auto j = static_cast<std::size_t>(uniform_below(gen, i + 1));
    std::swap(items[i], items[j]);
  }
}

TrialReport monte_carlo_distinct(const RealSet& set, std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers) {
  if (set.n() < 3) throw DegenerateInput("Monte Carlo estimate needs at least three elements");
  if (trials == 0) throw PreconditionError("trials must be positive");
  const std::vector<std::int64_t> x = set.integer_image().values;

  const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<BlockResult> results(blocks);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  auto work = [&](unsigned w) {
    for (std::uint64_t b = w; b < blocks; b += workers) {
      const std::uint64_t count = std::min(kTrialBlock, trials - b * kTrialBlock);
      results[b] = run_block(x, seed, b, count);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  TrialReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.min_distinct = results.front().min;
  rep.max_distinct = results.front().max;
  for (const BlockResult& r : results) {
    rep.sum_distinct += r.sum;
    rep.sum_distinct_squared += r.sum_sq;
    rep.min_distinct = std::min(rep.min_distinct, r.min);
    rep.max_distinct = std::max(rep.max_distinct, r.max);
  }
  const Rational t(static_cast<std::int64_t>(trials));
  rep.mean_distinct = Rational(rep.sum_distinct) / t;
  if (trials > 1) {
    const Rational s(rep.sum_distinct);
    rep.sample_variance = (Rational(rep.sum_distinct_squared) - s * s / t) / (t - 1);
  }
  rep.sample_stddev = std::sqrt(rep.sample_variance.convert_to<double>());
  return rep;
}

SumSLemma check_sum_s_lemma(const RealSet& set) {
  SumSLemma out;
  const int n = set.n();
  out.rhs = Rational(n * n, 4);
  if (n >= 3) out.lhs = diff_summary(set).sum_s3;
  out.ok = Rational(out.lhs) <= out.rhs;
  return out;
}

}  // namespace gpath
