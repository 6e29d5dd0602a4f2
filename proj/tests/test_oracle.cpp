#include <doctest.h>

#include "gpath/constructor.hpp"
#include "gpath/oracle.hpp"
#include "reference.hpp"

using namespace gpath;

namespace {

std::vector<Rational> Q(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<std::vector<int>> as_vectors(const std::vector<Permutation>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.emplace_back(p.values().begin(), p.values().end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_graceful_paths small cases") {
  CHECK(as_vectors(graceful_paths(3, 2)) == std::vector<std::vector<int>>{{2, 1, 3}, {2, 3, 1}});
  const auto from1 = as_vectors(graceful_paths(4, 1));
  CHECK(std::find(from1.begin(), from1.end(), std::vector<int>{1, 4, 2, 3}) != from1.end());
  CHECK(as_vectors(graceful_paths(2, std::nullopt)) ==
        std::vector<std::vector<int>>{{1, 2}, {2, 1}});
}

TEST_CASE("enumeration matches plain enumeration, in lexicographic order") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(as_vectors(graceful_paths(n, std::nullopt)) == reference::all_graceful(n));
  }
}

TEST_CASE("enumeration budget and early stop") {
  std::uint64_t seen = 0;
  const SearchStats stopped = enumerate_graceful_paths(6, std::nullopt, [&](std::span<const int>) {
    return ++seen < 3;
  });
  CHECK(stopped.status == SearchStatus::Stopped);
  CHECK(seen == 3);

  const SearchStats cut = enumerate_graceful_paths(
      9, std::nullopt, [](std::span<const int>) { return true; }, SearchBudget{50});
  CHECK(cut.status == SearchStatus::BudgetExhausted);
  CHECK(cut.nodes == 50);
  CHECK_THROWS_AS(graceful_paths(9, std::nullopt, SearchBudget{50}), BudgetExhausted);
  CHECK_THROWS_AS(parity_census(9, SearchBudget{50}), BudgetExhausted);
  CHECK_THROWS_AS(exists_good(13, 4, std::nullopt, SearchBudget{10}), BudgetExhausted);
  CHECK_THROWS_AS(graceful_paths(0, std::nullopt), PreconditionError);
  CHECK_THROWS_AS(graceful_paths(4, 5), PreconditionError);
}

TEST_CASE("exists_good") {
  CHECK_FALSE(exists_good(5, 2, std::nullopt));
  CHECK_FALSE(exists_good(5, 4, std::nullopt));
  CHECK(exists_good(5, 1, std::nullopt));
  CHECK(exists_good(3, 2, GoodVariant::Type1));
  CHECK(exists_good(3, 2, GoodVariant::Type2));
  CHECK_FALSE(exists_good(4, 1, GoodVariant::Type1));
  for (int n = 1; n <= 8; ++n) {
    for (int s = 1; s <= n; ++s) {
      const auto [t1, t2] = reference::good_exists(n, s);
      CHECK(exists_good(n, s, GoodVariant::Type1) == t1);
      CHECK(exists_good(n, s, GoodVariant::Type2) == t2);
    }
  }
}

TEST_CASE("no good sequence at the exceptional starts up to 13") {
  for (int n : {5, 9, 13}) {
    const int star = *special_start(n);
    CHECK_FALSE(exists_good(n, star, std::nullopt));
    CHECK_FALSE(exists_good(n, n + 1 - star, std::nullopt));
    CHECK(exists_graceful_path(n, star));
  }
}

TEST_CASE("parity census") {
  const ParityCensus c4 = parity_census(4);
  CHECK(c4.total() > 0);
  CHECK(c4.opposite_parity() == 0);
  const ParityCensus c6 = parity_census(6);
  CHECK(c6.total() > 0);
  CHECK(c6.equal_parity() == 0);
  const ParityCensus c2 = parity_census(2);
  CHECK(c2.total() == 2);
  CHECK(c2.counts[1][0] == 1);
  CHECK(c2.counts[0][1] == 1);
  CHECK(parity_census(8).total() == reference::all_graceful(8).size());
}

TEST_CASE("graceful_cycle_search") {
  const CycleResult sidon = graceful_cycle_search(RealSet(Q({0, 1, 3, 7})));
  REQUIRE(sidon.outcome == CycleOutcome::Found);
  CHECK(sidon.cycle == Q({0, 1, 3, 7}));

  for (int n = 3; n <= 9; ++n) {
    CHECK(graceful_cycle_search(RealSet::range(1, n)).outcome == CycleOutcome::ProvenNone);
  }
  CHECK(graceful_cycle_search(RealSet(Q({1, 2, 3, 4, 6}))).outcome == CycleOutcome::ProvenNone);

  const CycleResult cut = graceful_cycle_search(RealSet::range(1, 10), SearchBudget{100});
  CHECK(cut.outcome == CycleOutcome::BudgetExhausted);
  CHECK_THROWS_AS(graceful_cycle_search(RealSet(Q({1, 2}))), DegenerateInput);

  // Rational input goes through the integer image and comes back unchanged.
  const RealSet frac({Rational(0), Rational(1, 3), Rational(1), Rational(7, 3)});
  const CycleResult fr = graceful_cycle_search(frac);
  REQUIRE(fr.outcome == CycleOutcome::Found);
  CHECK(fr.cycle == std::vector<Rational>{0, Rational(1, 3), 1, Rational(7, 3)});
}

TEST_CASE("property: cycle search agrees with plain enumeration and canonical form") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t size = 3 + static_cast<std::size_t>(trial % 5);
    const auto v = reference::random_subset(gen, 0, 14, size);
    const RealSet set = RealSet::from_integers(v);
    const CycleResult r = graceful_cycle_search(set);
    CHECK((r.outcome == CycleOutcome::Found) == reference::any_graceful_cycle(reference::to_rationals(v)));
    if (r.outcome == CycleOutcome::Found) {
      CHECK(is_graceful_cycle(std::span<const Rational>(r.cycle)));
      CHECK(check_cycle_instance(r.cycle, set) == InstanceVerdict::Ok);
      CHECK(r.cycle.front() == set.elements().front());
      CHECK(r.cycle[1] < r.cycle.back());
    }
    if (cycle_parity_obstructed(set)) CHECK(r.outcome == CycleOutcome::ProvenNone);
  }
}

TEST_CASE("cycle_parity_obstructed") {
  CHECK(cycle_parity_obstructed(RealSet(Q({1, 2, 3, 4, 6}))));
  CHECK_FALSE(cycle_parity_obstructed(RealSet::range(1, 6)));
  CHECK_FALSE(cycle_parity_obstructed(RealSet(Q({0, 1, 3, 7}))));
  CHECK_THROWS_AS(cycle_parity_obstructed(RealSet({Rational(1, 2), Rational(1)})),
                  PreconditionError);
}

TEST_CASE("circular classes") {
  int count = 0;
  for_each_circular_class(6, [&](std::span<const int> order) {
    CHECK(order[0] == 0);
    CHECK(order[1] < order.back());
    ++count;
  });
  CHECK(count == 60);  // 5!/2
}

TEST_CASE("exact expectation and presence probability") {
  CHECK(exact_expected_distinct(RealSet::range(1, 4)) == Rational(7, 3));
  CHECK(exact_expected_distinct(RealSet::range(1, 3)) == 2);
  CHECK(exact_expected_distinct(RealSet({Rational(-1, 2), Rational(1, 4), Rational(1)})) == 2);
  CHECK(exact_prob_diff_present(RealSet::range(1, 4), 3) == Rational(2, 3));
  CHECK(exact_prob_diff_present(RealSet::range(1, 3), 2) == 1);
  CHECK(exact_prob_diff_present(RealSet::range(1, 4), 100) == 0);
  CHECK(exact_prob_diff_present(RealSet::range(1, 4), Rational(1, 2)) == 0);
  CHECK_THROWS_AS(exact_expected_distinct(RealSet::range(1, 9)), SizeLimitExceeded);
  CHECK_THROWS_AS(exact_prob_diff_present(RealSet::range(1, 2), 1), DegenerateInput);
}

TEST_CASE("property: class enumeration matches all-orders enumeration; expectation sums presence") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t size = 3 + static_cast<std::size_t>(trial % 5);  // up to 7 for speed
    const auto v = reference::random_subset(gen, -10, 20, size);
    const RealSet set = RealSet::from_integers(v);
    const Rational e = exact_expected_distinct(set);
    CHECK(e == reference::expected_distinct_all_orders(reference::to_rationals(v)));
    Rational sum = 0;
    std::set<Rational> diffs;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) diffs.insert(Rational(v[j] - v[i]));
    for (const Rational& d : diffs) {
      const Rational p = exact_prob_diff_present(set, d);
      if (trial % 6 == 0) CHECK(p == reference::prob_present_all_orders(reference::to_rationals(v), d));
      sum += p;
    }
    CHECK(sum == e);
  }
}

TEST_CASE("oracle and constructor agree up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    for (int s = 1; s <= n; ++s) {
      const auto paths = graceful_paths(n, s);
      CHECK_FALSE(paths.empty());
      const Permutation built = construct_path(n, s).perm;
      CHECK(std::find(paths.begin(), paths.end(), built) != paths.end());
      for (const auto& p : paths) {
        CHECK((p.start() + p.back()) % 2 == (n * (n - 1) / 2) % 2);
      }
    }
  }
}
