#include <doctest.h>

#include <random>

#include "gpath/core.hpp"

using namespace gpath;

namespace {

std::vector<Rational> Q(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational(" 5/6 ") == q(5, 6));
  CHECK(parse_rational("-4/6") == q(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("1/-2"), PreconditionError);
  CHECK_THROWS_AS(parse_rational(""), PreconditionError);
  CHECK(to_string(q(10, 4)) == "5/2");
  CHECK(to_string(q(-6, 3)) == "-2");
}

TEST_CASE("Permutation validates its contents") {
  Permutation p({1, 6, 2, 5, 3, 4});
  CHECK(p.n() == 6);
  CHECK(p.start() == 1);
  CHECK(p.at(2) == 6);
  CHECK_THROWS_AS(Permutation({}), DegenerateInput);
  CHECK_THROWS_AS(Permutation({1, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({1, 3}), PreconditionError);
}

TEST_CASE("abs_diffs") {
  CHECK(abs_diffs(Q({1, 6, 2, 5, 3, 4})) == Q({5, 4, 3, 2, 1}));
  CHECK(abs_diffs(Q({2, 5, 1, 3, 4})) == Q({3, 4, 2, 1}));
  CHECK(abs_diffs(Q({1, 2})) == Q({1}));
  CHECK_THROWS_AS(abs_diffs(Q({1})), DegenerateInput);
  const std::vector<int> ints{2, 5, 1, 3, 4};
  CHECK(abs_diffs(std::span<const int>(ints)) == std::vector<int>{3, 4, 2, 1});
}

TEST_CASE("is_graceful_path") {
  CHECK(is_graceful_path(Q({1, 6, 2, 5, 3, 4})));
  CHECK_FALSE(is_graceful_path(Q({1, 2, 3})));
  CHECK_FALSE(is_graceful_path(Q({2, 4, 1, 5, 3})));
  CHECK(is_graceful_path(Q({42})));
  CHECK(is_graceful_path(std::vector<Rational>{q(1, 2), q(1, 3), q(7, 6)}));
}

TEST_CASE("is_graceful_cycle counts the wrap-around difference") {
  CHECK(is_graceful_cycle(Q({0, 1, 3, 7})));
  CHECK_FALSE(is_graceful_cycle(Q({1, 2, 3, 4})));
  CHECK_THROWS_AS(is_graceful_cycle(Q({1, 2})), DegenerateInput);
}

TEST_CASE("classify_good") {
  CHECK(classify_good(Permutation({1, 6, 2, 5, 3, 4})) == GoodSet{false, true});
  CHECK(classify_good(Permutation({2, 3, 1})) == GoodSet{false, true});
  CHECK(classify_good(Permutation({1, 2, 3})).empty());
  CHECK(to_string(classify_good(Permutation({1, 2, 3}))) == "NotGood");
  // n = 1 is vacuously good in both senses.
  CHECK(classify_good(Permutation({1})) == GoodSet{true, true});
  // (2,1,3): odd entries 2,3 >= 2, even entry 1 < 2.
  CHECK(classify_good(Permutation({2, 1, 3})) == GoodSet{true, false});
  // Graceful but the halves are mixed.
  CHECK(is_graceful_path(Permutation({2, 5, 1, 3, 4})));
  CHECK(classify_good(Permutation({2, 5, 1, 3, 4})).empty());
}

TEST_CASE("ap_map") {
  CHECK(ap_map(Permutation({1, 3, 2}), APSpec(10, 5, 3)) == Q({10, 20, 15}));
  CHECK(ap_map(Permutation({1, 6, 2, 5, 3, 4}), APSpec(0, -2, 6)) == Q({0, -10, -2, -8, -4, -6}));
  CHECK(ap_map(Permutation({2, 5, 1, 3, 4}), APSpec(q(1, 2), q(1, 3), 5)) ==
        std::vector<Rational>{q(5, 6), q(11, 6), q(1, 2), q(7, 6), q(3, 2)});
  CHECK_THROWS_AS(ap_map(Permutation({1, 2}), APSpec(0, 1, 3)), PreconditionError);
  CHECK_THROWS_AS(APSpec(0, 0, 3), PreconditionError);
}

TEST_CASE("verify_conjecture_instance reason codes") {
  const RealSet a = RealSet::range(1, 6);
  CHECK(verify_conjecture_instance(1, Q({1, 6, 2, 5, 3, 4}), a));
  CHECK(check_conjecture_instance(2, Q({1, 6, 2, 5, 3, 4}), a) == InstanceVerdict::WrongStart);
  CHECK(check_conjecture_instance(1, Q({1, 2, 3}), RealSet::range(1, 3)) ==
        InstanceVerdict::RepeatedDifference);
  CHECK(check_conjecture_instance(1, Q({1, 6, 2, 5, 3}), a) == InstanceVerdict::NotAPermutation);
  CHECK(check_conjecture_instance(1, Q({1, 6, 2, 5, 3, 3}), a) == InstanceVerdict::NotAPermutation);
  CHECK(check_cycle_instance(Q({0, 1, 3, 7}), RealSet(Q({0, 1, 3, 7}))) == InstanceVerdict::Ok);
  CHECK(check_cycle_instance(Q({1, 2, 3, 4}), RealSet::range(1, 4)) ==
        InstanceVerdict::RepeatedDifference);
}

TEST_CASE("RealSet sorts, rejects duplicates and maps to integers") {
  RealSet s({q(1, 2), q(-1, 3), q(5)});
  CHECK(s.elements()[0] == q(-1, 3));
  CHECK(s.contains(q(1, 2)));
  CHECK_FALSE(s.contains(q(1)));
  CHECK_FALSE(s.all_integers());
  CHECK_THROWS_AS(RealSet({q(1), q(2, 2)}), PreconditionError);

  const IntegerImage img = s.integer_image();
  CHECK(img.values == std::vector<std::int64_t>{0, 5, 32});
  for (std::size_t i = 0; i < img.values.size(); ++i) {
    CHECK(img.to_original(img.values[i]) == s.elements()[i]);
  }
}

TEST_CASE("property: abs_diffs of the reverse is the reversed abs_diffs") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> len(2, 12);
    std::uniform_int_distribution<int> val(-50, 50);
    std::vector<Rational> seq;
    const int n = len(gen);
    for (int i = 0; i < n; ++i) seq.emplace_back(val(gen), 1 + trial % 5);
    std::vector<Rational> rev(seq.rbegin(), seq.rend());
    std::vector<Rational> d = abs_diffs(seq);
    std::reverse(d.begin(), d.end());
    CHECK(abs_diffs(rev) == d);
  }
}

TEST_CASE("property: ap_map preserves gracefulness and graceful paths use {1..n-1}") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 9;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), gen);
    const Permutation p(v);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    int step_num = num(gen);
    if (step_num == 0) step_num = 1;
    const APSpec ap(Rational(num(gen), den(gen)), Rational(step_num, den(gen)), n);
    CHECK(is_graceful_path(p) == is_graceful_path(ap_map(p, ap)));
    if (is_graceful_path(p)) {
      std::vector<int> d = abs_diffs(p.values());
      std::sort(d.begin(), d.end());
      std::vector<int> expect(static_cast<std::size_t>(n - 1));
      std::iota(expect.begin(), expect.end(), 1);
      CHECK(d == expect);
    }
    if (!classify_good(p).empty()) CHECK(is_graceful_path(p));
  }
}
