#include "gpath/constructor.hpp"

#include <sstream>

namespace gpath {

namespace {

int floor_mid(int n) { return (n + 1) / 2; }
int ceil_mid(int n) { return (n + 2) / 2; }

void require_range(int n, int s) {
  if (n < 1) throw PreconditionError("n must be positive");
  if (s < 1 || s > n) {
    throw PreconditionError("start " + std::to_string(s) + " outside [1, " + std::to_string(n) + "]");
  }
}

void require_good(const Permutation& p, GoodVariant v, const char* op) {
  if (!classify_good(p).contains(v)) {
    throw PreconditionError(std::string(op) + " requires a " + std::string(to_string(v)) +
                            "-good permutation");
  }
}

// b_i = n + 1 - a_i without the goodness precondition.
Permutation mirror(const Permutation& p) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.n()));
  for (int v : p.values()) out.push_back(p.n() + 1 - v);
  return Permutation(std::move(out));
}

Permutation shift(const Permutation& p, int odd_delta, int even_delta) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(p.n()));
  for (int i = 1; i <= p.n(); ++i) out.push_back(p.at(i) + (i % 2 == 1 ? odd_delta : even_delta));
  return Permutation(std::move(out));
}

// (s, n-s+1, s-1, n-s+2, ..., 1, n) followed by s + sub.
Permutation case1_combine(int n, int s, const Permutation& sub) {
  if (sub.n() != n - 2 * s || sub.start() != s) throw InternalError("Case1: sub-problem mismatch");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < s; ++k) {
    out.push_back(s - k);
    out.push_back(n - s + 1 + k);
  }
  for (int v : sub.values()) out.push_back(v + s);
  return Permutation(std::move(out));
}

// (s, n-s+2, s-1, n-s+3, ..., 2, n, 1)
std::vector<int> descending_prefix(int n, int s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k + 1 < s; ++k) {
    out.push_back(s - k);
    out.push_back(n - s + 2 + k);
  }
  out.push_back(1);
  return out;
}

Permutation case2_combine(int n, int s, const Permutation& sub) {
  if (sub.n() != n - 2 * s + 1 || sub.start() != n - 3 * s + 2) {
    throw InternalError("Case2: sub-problem mismatch");
  }
  std::vector<int> out = descending_prefix(n, s);
  for (int v : sub.values()) out.push_back(v + s);
  return Permutation(std::move(out));
}

// Descending prefix, then the centre m = n - 2s + 2 and an outward
// alternation around it (first step +1 or -1) over the remaining values.
Permutation special_sequence(int n, int s, int first_step) {
  std::vector<int> out = descending_prefix(n, s);
  const int centre = n - 2 * s + 2;
  const int remaining = n - 2 * s + 1;
  int offset = 0;
  for (int k = 0; k < remaining; ++k) {
    out.push_back(centre + offset);
    // 0, +1, -1, +2, -2, ... (or the mirror image)
    offset = offset * first_step > 0 ? -offset : -offset + first_step;
  }
  return Permutation(std::move(out));
}

Permutation special_n1(int n, int s) { return special_sequence(n, s, +1); }
Permutation special_n2(int n, int s) { return special_sequence(n, s, -1); }

Permutation table_lookup(int n, int s, GoodVariant v) {
  for (const BaseEntry& e : base_table()) {
    if (e.n == n && e.s == s && e.variant == v) return Permutation(e.seq);
  }
  throw InfeasibleError("no " + std::string(to_string(v)) + "-good permutation of [" +
                        std::to_string(n) + "] starts at " + std::to_string(s));
}

class Builder {
 public:
  Permutation good(int n, int s, std::optional<GoodVariant> want);
  std::vector<TraceStep> steps;

 private:
  Permutation emit(Rule rule, int n, int s, std::optional<GoodVariant> want, Permutation p) {
    steps.push_back(TraceStep{rule, n, s, want});
    return p;
  }
};

Permutation Builder::good(int n, int s, std::optional<GoodVariant> want) {
  const int h = floor_mid(n);
  if ((want == GoodVariant::Type1 && s < ceil_mid(n)) || (want == GoodVariant::Type2 && s > h)) {
    throw InfeasibleError("no " + std::string(to_string(*want)) + "-good permutation of [" +
                          std::to_string(n) + "] can start at " + std::to_string(s));
  }

  // Type1 lives on starts >= ceil((n+1)/2): build the mirror image as Type2.
  if (s > h || want == GoodVariant::Type1) {
    std::optional<GoodVariant> sub_want;
    if (want == GoodVariant::Type1) sub_want = GoodVariant::Type2;
    if (want == GoodVariant::Type2) sub_want = GoodVariant::Type1;
    Permutation sub = good(n, n + 1 - s, sub_want);
    return emit(Rule::Reflect, n, s, GoodVariant::Type1, mirror(sub));
  }

  if (s == 1) return emit(Rule::BaseZigzag, n, 1, GoodVariant::Type2, zigzag(n));

  if (special_start(n) == s) {
    if (n % 4 == 1) {
      throw InfeasibleError("no good permutation of [" + std::to_string(n) +
                            "] starts at the exceptional start " + std::to_string(s));
    }
    return emit(Rule::SpecialN2Mod4, n, s, GoodVariant::Type2, special_n2(n, s));
  }

  if (n <= kBaseTableMaxN) {
    return emit(Rule::BaseTable, n, s, GoodVariant::Type2, table_lookup(n, s, GoodVariant::Type2));
  }

  if (2 * s <= h) {
    if ((n - 2 * s) % 4 != 1) {
      Permutation sub = good(n - 2 * s, s, GoodVariant::Type2);
      return emit(Rule::Case1, n, s, GoodVariant::Type2, case1_combine(n, s, sub));
    }
    Permutation sub = good(n - 2 * s + 1, n - 3 * s + 2, GoodVariant::Type1);
    return emit(Rule::Case2, n, s, GoodVariant::Type2, case2_combine(n, s, sub));
  }

  // floor((n+1)/2)/2 < s <= floor((n+1)/2): start from s' = n + 1 - s - floor(n/2),
  // reflect to n + 1 - s', then shift down to s.
  const int s_prime = n + 1 - s - n / 2;
  Permutation low = good(n, s_prime, GoodVariant::Type2);
  Permutation high = emit(Rule::Reflect, n, n + 1 - s_prime, GoodVariant::Type1, mirror(low));
  return emit(Rule::ShiftType1to2, n, s, GoodVariant::Type2, shift_type1_to_type2(high));
}

void verify_output(const Permutation& p, int n, int s) {
  if (p.n() != n || p.start() != s || !is_graceful_path(p)) {
    throw InternalError("construction for n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                        " failed verification");
  }
}

}  // namespace

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::BaseZigzag: return "BaseZigzag";
    case Rule::BaseTable: return "BaseTable";
    case Rule::Case1: return "Case1";
    case Rule::Case2: return "Case2";
    case Rule::Reflect: return "Reflect";
    case Rule::ShiftType1to2: return "ShiftType1to2";
    case Rule::ShiftType2to1: return "ShiftType2to1";
    case Rule::SpecialN1Mod4: return "SpecialN1Mod4";
    case Rule::SpecialN2Mod4: return "SpecialN2Mod4";
  }
  return "?";
}

std::string render(const TraceStep& step) {
  std::ostringstream os;
  os << to_string(step.rule) << "(n=" << step.n << ",s=" << step.s;
  if (step.want) os << ",want=" << to_string(*step.want);
  os << ")";
  return os.str();
}

Permutation zigzag(int n) {
  if (n < 1) throw PreconditionError("n must be positive");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  int lo = 1;
  int hi = n;
  while (lo <= hi) {
    out.push_back(lo++);
    if (lo <= hi) out.push_back(hi--);
  }
  return Permutation(std::move(out));
}

Permutation reflect(const Permutation& p) {
  if (classify_good(p).empty()) throw PreconditionError("reflect requires a good permutation");
  return mirror(p);
}

Permutation shift_type1_to_type2(const Permutation& p) {
  require_good(p, GoodVariant::Type1, "shift_type1_to_type2");
  const int n = p.n();
  return shift(p, -(n / 2), (n + 1) / 2);
}

Permutation shift_type2_to_type1(const Permutation& p) {
  require_good(p, GoodVariant::Type2, "shift_type2_to_type1");
  const int n = p.n();
  return shift(p, n / 2, -((n + 1) / 2));
}

std::optional<int> special_start(int n) {
  const int h = floor_mid(n);
  if (h % 2 == 0) return std::nullopt;
  return (h + 1) / 2;
}

bool is_exceptional_start(int n, int s) {
  if (n < 5 || n % 4 != 1) return false;
  const int star = *special_start(n);
  return s == star || s == n + 1 - star;
}

Construction construct_good(int n, int s, std::optional<GoodVariant> want) {
  require_range(n, s);
  Builder b;
  Permutation p = b.good(n, s, want);
  verify_output(p, n, s);
  const GoodSet cls = classify_good(p);
  if (cls.empty() || (want && !cls.contains(*want))) {
    throw InternalError("construction for n=" + std::to_string(n) + ", s=" + std::to_string(s) +
                        " is not good of the requested variant");
  }
  return Construction{std::move(p), ConstructionTrace{std::move(b.steps)}};
}

Construction construct_path(int n, int s) {
  require_range(n, s);
  if (!is_exceptional_start(n, s)) return construct_good(n, s);

  const int star = *special_start(n);
  std::vector<TraceStep> steps{TraceStep{Rule::SpecialN1Mod4, n, star, std::nullopt}};
  Permutation p = special_n1(n, star);
  if (s != star) {
    p = mirror(p);
    steps.push_back(TraceStep{Rule::Reflect, n, s, std::nullopt});
  }
  verify_output(p, n, s);
  return Construction{std::move(p), ConstructionTrace{std::move(steps)}};
}

Permutation replay(const ConstructionTrace& trace) {
  std::vector<Permutation> stack;
  auto pop = [&stack]() {
    if (stack.empty()) throw PreconditionError("trace step has no input");
    Permutation p = std::move(stack.back());
    stack.pop_back();
    return p;
  };
  for (const TraceStep& st : trace.steps) {
    switch (st.rule) {
      case Rule::BaseZigzag: stack.push_back(zigzag(st.n)); break;
      case Rule::BaseTable:
        stack.push_back(table_lookup(st.n, st.s, st.want.value_or(GoodVariant::Type2)));
        break;
      case Rule::SpecialN1Mod4: stack.push_back(special_n1(st.n, st.s)); break;
      case Rule::SpecialN2Mod4: stack.push_back(special_n2(st.n, st.s)); break;
      case Rule::Reflect: stack.push_back(mirror(pop())); break;
      case Rule::ShiftType1to2: stack.push_back(shift_type1_to_type2(pop())); break;
      case Rule::ShiftType2to1: stack.push_back(shift_type2_to_type1(pop())); break;
      case Rule::Case1: stack.push_back(case1_combine(st.n, st.s, pop())); break;
      case Rule::Case2: stack.push_back(case2_combine(st.n, st.s, pop())); break;
    }
  }
  if (stack.size() != 1) throw PreconditionError("trace does not reduce to a single permutation");
  return std::move(stack.front());
}

}  // namespace gpath
