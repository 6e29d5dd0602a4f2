#include "gpath/core.hpp"

#include <algorithm>

namespace gpath {

namespace {

template <typename T>
bool all_distinct(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw PreconditionError("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const BigInt num = parse_integer(trim(t.substr(0, slash)), text);
  const std::string_view den_text = trim(t.substr(slash + 1));
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw PreconditionError("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text, text);
  if (den == 0) throw PreconditionError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Permutation::Permutation(std::vector<int> seq) : seq_(std::move(seq)) {
  if (seq_.empty()) throw DegenerateInput("permutation must have at least one element");
  std::vector<bool> seen(seq_.size() + 1, false);
  const int n = static_cast<int>(seq_.size());
  for (int v : seq_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw PreconditionError("sequence is not a permutation of [1, " + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

std::string_view to_string(GoodVariant v) { return v == GoodVariant::Type1 ? "Type1" : "Type2"; }

std::string to_string(const GoodSet& g) {
  if (g.type1 && g.type2) return "Type1|Type2";
  if (g.type1) return "Type1";
  if (g.type2) return "Type2";
  return "NotGood";
}

APSpec::APSpec(Rational first, Rational step, int length)
    : first_(std::move(first)), step_(std::move(step)), length_(length) {
  if (step_ == 0) throw PreconditionError("arithmetic progression step must be nonzero");
  if (length_ < 1) throw PreconditionError("arithmetic progression length must be positive");
}

Rational APSpec::term(int index) const { return first_ + Rational(index - 1) * step_; }

RealSet::RealSet(std::vector<Rational> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw PreconditionError("set contains a repeated element");
  }
}

RealSet RealSet::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("empty range");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t x = lo; x <= hi; ++x) v.emplace_back(x);
  return RealSet(std::move(v));
}

RealSet RealSet::from_integers(std::span<const std::int64_t> values) {
  std::vector<Rational> v(values.begin(), values.end());
  return RealSet(std::move(v));
}

bool RealSet::contains(const Rational& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool RealSet::all_integers() const {
  return std::all_of(elems_.begin(), elems_.end(),
                     [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

IntegerImage RealSet::integer_image() const {
  IntegerImage image;
  if (elems_.empty()) return image;
  BigInt lcm = 1;
  for (const Rational& q : elems_) {
    lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(q)));
  }
  image.offset = elems_.front();
  image.scale = Rational(lcm);
  const BigInt limit = BigInt(1) << 62;
  image.values.reserve(elems_.size());
  for (const Rational& q : elems_) {
    const Rational scaled = (q - image.offset) * image.scale;
    const BigInt v = boost::multiprecision::numerator(scaled);
    if (v >= limit) throw PreconditionError("set spread too large for integer kernels");
    image.values.push_back(static_cast<std::int64_t>(v));
  }
  return image;
}

std::vector<Rational> abs_diffs(std::span<const Rational> seq) {
  if (seq.size() < 2) throw DegenerateInput("abs_diffs needs at least two elements");
  std::vector<Rational> out;
  out.reserve(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(abs(seq[i + 1] - seq[i]));
  return out;
}

std::vector<int> abs_diffs(std::span<const int> seq) {
  if (seq.size() < 2) throw DegenerateInput("abs_diffs needs at least two elements");
  std::vector<int> out;
  out.reserve(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) out.push_back(std::abs(seq[i + 1] - seq[i]));
  return out;
}

bool is_graceful_path(std::span<const Rational> seq) {
  if (seq.empty()) throw DegenerateInput("empty sequence");
  if (seq.size() == 1) return true;
  return all_distinct(abs_diffs(seq));
}

bool is_graceful_path(std::span<const int> seq) {
  if (seq.empty()) throw DegenerateInput("empty sequence");
  if (seq.size() == 1) return true;
  return all_distinct(abs_diffs(seq));
}

bool is_graceful_cycle(std::span<const Rational> seq) {
  if (seq.size() < 3) throw DegenerateInput("a cycle needs at least three elements");
  std::vector<Rational> d = abs_diffs(seq);
  d.push_back(abs(seq.front() - seq.back()));
  return all_distinct(std::move(d));
}

bool is_graceful_cycle(std::span<const int> seq) {
  if (seq.size() < 3) throw DegenerateInput("a cycle needs at least three elements");
  std::vector<int> d = abs_diffs(seq);
  d.push_back(std::abs(seq.front() - seq.back()));
  return all_distinct(std::move(d));
}

bool halves_hold(const Permutation& p, GoodVariant v) {
  const int n = p.n();
  const int ceil_mid = (n + 2) / 2;   // ceil((n+1)/2)
  const int floor_mid = (n + 1) / 2;  // floor((n+1)/2)
  for (int i = 1; i <= n; ++i) {
    const int a = p.at(i);
    const bool odd = i % 2 == 1;
    if (v == GoodVariant::Type1) {
      if (odd ? a < ceil_mid : a >= ceil_mid) return false;
    } else {
      if (odd ? a > floor_mid : a <= floor_mid) return false;
    }
  }
  return true;
}

GoodSet classify_good(const Permutation& p) {
  if (!is_graceful_path(p)) return {};
  return GoodSet{halves_hold(p, GoodVariant::Type1), halves_hold(p, GoodVariant::Type2)};
}

std::vector<Rational> ap_map(const Permutation& p, const APSpec& ap) {
  if (ap.length() != p.n()) {
    throw PreconditionError("progression length " + std::to_string(ap.length()) +
                            " does not match permutation size " + std::to_string(p.n()));
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p.n()));
  for (int v : p.values()) out.push_back(ap.term(v));
  return out;
}

std::string_view to_string(InstanceVerdict v) {
  switch (v) {
    case InstanceVerdict::Ok: return "ok";
    case InstanceVerdict::NotAPermutation: return "not-a-permutation";
    case InstanceVerdict::WrongStart: return "wrong-start";
    case InstanceVerdict::RepeatedDifference: return "repeated-difference";
  }
  return "unknown";
}

namespace {

bool is_permutation_of(std::span<const Rational> seq, const RealSet& set) {
  if (seq.size() != set.size()) return false;
  std::vector<Rational> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  return std::equal(sorted.begin(), sorted.end(), set.elements().begin());
}

}  // namespace

InstanceVerdict check_conjecture_instance(const Rational& s, std::span<const Rational> seq,
                                          const RealSet& set) {
  if (seq.empty() || !is_permutation_of(seq, set)) return InstanceVerdict::NotAPermutation;
  if (seq.front() != s) return InstanceVerdict::WrongStart;
  if (!is_graceful_path(seq)) return InstanceVerdict::RepeatedDifference;
  return InstanceVerdict::Ok;
}

InstanceVerdict check_cycle_instance(std::span<const Rational> seq, const RealSet& set) {
  if (seq.size() < 3 || !is_permutation_of(seq, set)) return InstanceVerdict::NotAPermutation;
  if (!is_graceful_cycle(seq)) return InstanceVerdict::RepeatedDifference;
  return InstanceVerdict::Ok;
}

}  // namespace gpath
