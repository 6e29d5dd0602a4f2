#pragma once

// Exact domain types shared by the constructor, the oracle searches and the
// additive statistics: permutations of [n], arithmetic progressions and
// finite sets of rationals, plus the distinct-difference predicates.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpath {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input too small for the operation (e.g. fewer than two elements).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Requested (n, s, variant) has no good permutation.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A construction produced something that failed its own verification.
class InternalError : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

std::string to_string(const Rational& q);

// Accepts "p", "-p" and "p/q" with q != 0.
Rational parse_rational(std::string_view text);

/// An ordering of [n] = {1, ..., n}. Positions are 1-indexed through at().
class Permutation {
 public:
  explicit Permutation(std::vector<int> seq);

  int n() const { return static_cast<int>(seq_.size()); }
  int start() const { return seq_.front(); }
  int back() const { return seq_.back(); }
  int at(int position) const { return seq_[static_cast<std::size_t>(position - 1)]; }
  std::span<const int> values() const { return seq_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> seq_;
};

enum class GoodVariant { Type1, Type2 };

inline GoodVariant opposite(GoodVariant v) {
  return v == GoodVariant::Type1 ? GoodVariant::Type2 : GoodVariant::Type1;
}

std::string_view to_string(GoodVariant v);

// Subset of {Type1, Type2}; empty means NotGood.
struct GoodSet {
  bool type1 = false;
  bool type2 = false;

  bool empty() const { return !type1 && !type2; }
  bool contains(GoodVariant v) const { return v == GoodVariant::Type1 ? type1 : type2; }
  friend bool operator==(const GoodSet&, const GoodSet&) = default;
};

// "Type1", "Type2", "Type1|Type2" or "NotGood".
std::string to_string(const GoodSet& g);

/// first, first + step, ..., first + (length - 1) * step with step != 0.
class APSpec {
 public:
  APSpec(Rational first, Rational step, int length);

  const Rational& first() const { return first_; }
  const Rational& step() const { return step_; }
  int length() const { return length_; }
  Rational term(int index) const;  // 1-indexed

 private:
  Rational first_;
  Rational step_;
  int length_;
};

// Integer copy of a rational set under x -> (x - offset) * scale.
struct IntegerImage {
  std::vector<std::int64_t> values;  // ascending, values.front() == 0
  Rational offset;
  Rational scale;

  Rational to_original(std::int64_t v) const { return offset + Rational(v) / scale; }
  Rational diff_to_original(std::int64_t d) const { return Rational(d) / scale; }
};

/// Finite set of distinct rationals, kept sorted ascending.
class RealSet {
 public:
  RealSet() = default;
  // Throws PreconditionError on duplicate elements.
  explicit RealSet(std::vector<Rational> elements);

  static RealSet range(std::int64_t lo, std::int64_t hi);
  static RealSet from_integers(std::span<const std::int64_t> values);

  std::size_t size() const { return elems_.size(); }
  int n() const { return static_cast<int>(elems_.size()); }
  std::span<const Rational> elements() const { return elems_; }
  bool contains(const Rational& x) const;
  bool all_integers() const;

  // Affine integer image used by the search and counting kernels. Throws
  // PreconditionError if the scaled spread does not fit in 62 bits.
  IntegerImage integer_image() const;

  friend bool operator==(const RealSet&, const RealSet&) = default;

 private:
  std::vector<Rational> elems_;
};

std::vector<Rational> abs_diffs(std::span<const Rational> seq);
std::vector<int> abs_diffs(std::span<const int> seq);

bool is_graceful_path(std::span<const Rational> seq);
bool is_graceful_path(std::span<const int> seq);
inline bool is_graceful_path(const Permutation& p) { return is_graceful_path(p.values()); }

// All n differences including the wrap-around |seq[n] - seq[1]| distinct.
bool is_graceful_cycle(std::span<const Rational> seq);
bool is_graceful_cycle(std::span<const int> seq);

GoodSet classify_good(const Permutation& p);

// Position/half condition of one variant, ignoring differences.
bool halves_hold(const Permutation& p, GoodVariant v);

std::vector<Rational> ap_map(const Permutation& p, const APSpec& ap);

enum class InstanceVerdict { Ok, NotAPermutation, WrongStart, RepeatedDifference };

std::string_view to_string(InstanceVerdict v);

InstanceVerdict check_conjecture_instance(const Rational& s, std::span<const Rational> seq,
                                          const RealSet& set);

inline bool verify_conjecture_instance(const Rational& s, std::span<const Rational> seq,
                                       const RealSet& set) {
  return check_conjecture_instance(s, seq, set) == InstanceVerdict::Ok;
}

// Cyclic variant; WrongStart is never reported.
InstanceVerdict check_cycle_instance(std::span<const Rational> seq, const RealSet& set);

}  // namespace gpath
