#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpath/cli.hpp"
#include "gpath/constructor.hpp"
#include "gpath/oracle.hpp"
#include "gpath/stats.hpp"

namespace gpath::cli {

namespace {

using nlohmann::json;

constexpr int kMaxConstructN = 10'000'000;
constexpr int kTableDetailMaxN = 64;

json rationals(std::span<const Rational> values) {
  json arr = json::array();
  for (const Rational& q : values) arr.push_back(to_string(q));
  return arr;
}

json good_classes(const GoodSet& g) {
  json arr = json::array();
  if (g.type1) arr.push_back("Type1");
  if (g.type2) arr.push_back("Type2");
  return arr;
}

std::string join(std::span<const int> values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::string join(std::span<const Rational> values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += to_string(values[i]);
  }
  return s;
}

json record(std::string_view command, json inputs, json result) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

double approx(const Rational& q) { return q.convert_to<double>(); }

struct ConstructOptions {
  int n = 0;
  int s = 0;
  std::string ap;
  bool trace = false;
  std::string format = "json";
};

int cmd_construct(const ConstructOptions& o, std::ostream& out) {
  if (o.n < 1 || o.n > kMaxConstructN) throw UsageError("n must lie in [1, 10000000]");
  if (o.s < 1 || o.s > o.n) throw UsageError("s must lie in [1, n]");
  std::optional<APSpec> ap;
  if (!o.ap.empty()) {
    auto [first, step] = parse_ap(o.ap);
    ap.emplace(first, step, o.n);
  }

  const Construction c = construct_path(o.n, o.s);
  const Permutation& p = c.perm;
  const std::vector<int> diffs = p.n() > 1 ? abs_diffs(p.values()) : std::vector<int>{};
  const GoodSet cls = classify_good(p);
  std::vector<Rational> image;
  std::vector<Rational> image_diffs;
  if (ap) {
    image = ap_map(p, *ap);
    if (image.size() > 1) image_diffs = abs_diffs(image);
    if (!is_graceful_path(image)) throw InternalError("progression image is not graceful");
  }

  if (o.format == "plain") {
    out << (ap ? join(image, ',') : join(p.values(), ',')) << "\n";
    out << "differences: " << (ap ? join(image_diffs, ',') : join(diffs, ',')) << "\n";
    out << "good: " << to_string(cls) << "\n";
    if (o.trace) {
      for (const TraceStep& st : c.trace.steps) out << "trace: " << render(st) << "\n";
    }
  } else if (o.format == "csv") {
    out << "n,s,sequence,differences,good" << (ap ? ",ap_image,ap_differences" : "") << "\n";
    out << o.n << "," << o.s << "," << join(p.values(), ' ') << "," << join(diffs, ' ') << ","
        << to_string(cls);
    if (ap) out << "," << join(image, ' ') << "," << join(image_diffs, ' ');
    out << "\n";
  } else {
    json inputs{{"n", o.n}, {"s", o.s}};
    if (ap) inputs["ap"] = {{"first", to_string(ap->first())}, {"step", to_string(ap->step())}};
    json result{{"sequence", p.values()},
                {"differences", diffs},
                {"graceful", true},
                {"good_classes", good_classes(cls)},
                {"good", !cls.empty()},
                {"exceptional_start", is_exceptional_start(o.n, o.s)}};
    if (ap) {
      result["ap_image"] = rationals(image);
      result["ap_differences"] = rationals(image_diffs);
    }
    json doc = record("construct", std::move(inputs), std::move(result));
    if (o.trace) {
      json steps = json::array();
      for (const TraceStep& st : c.trace.steps) {
        json step{{"rule", to_string(st.rule)}, {"n", st.n}, {"s", st.s}};
        step["want"] = st.want ? json(to_string(*st.want)) : json(nullptr);
        steps.push_back(std::move(step));
      }
      doc["trace"] = std::move(steps);
    }
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string set;
  std::string seq;
  bool cycle = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::istream& in) {
  const RealSet set = parse_set(o.set);
  std::string seq_text = o.seq;
  if (seq_text == "-") {
    if (!std::getline(in, seq_text)) throw UsageError("no sequence on standard input");
  }
  const std::vector<Rational> seq = parse_list(seq_text);
  InstanceVerdict verdict;
  if (o.cycle) {
    verdict = seq.size() < 3 ? InstanceVerdict::NotAPermutation : check_cycle_instance(seq, set);
  } else {
    verdict = check_conjecture_instance(seq.front(), seq, set);
  }
  json result{{"verdict", to_string(verdict)}, {"ok", verdict == InstanceVerdict::Ok}};
  if (seq.size() > 1) {
    std::vector<Rational> d = abs_diffs(seq);
    if (o.cycle) d.push_back(abs(seq.front() - seq.back()));
    result["differences"] = rationals(d);
  }
  json inputs{{"set", rationals(set.elements())}, {"seq", rationals(seq)}, {"cycle", o.cycle}};
  out << record("verify", std::move(inputs), std::move(result)).dump(2) << "\n";
  return verdict == InstanceVerdict::Ok ? kExitOk : kExitNegative;
}

struct SweepOptions {
  int nmax = 0;
  std::string mode = "construct";
  std::string format = "csv";
};

std::string verdict_cell(std::optional<bool> v) {
  if (!v) return "budget-exhausted";
  return *v ? "true" : "false";
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  const bool use_construct = o.mode != "oracle";
  const bool use_oracle = o.mode != "construct";
  if (o.nmax < 1) throw UsageError("nmax must be positive");
  if (use_oracle && o.nmax > kSweepOracleMaxN) {
    throw UsageError("oracle mode is capped at n = " + std::to_string(kSweepOracleMaxN));
  }
  if (!use_oracle && o.nmax > 512) throw UsageError("construct sweeps are capped at n = 512");
  const SearchBudget budget{default_budget()};

  out << "n,s,sequence,graceful,good_classes,good_expected,oracle_path_exists,oracle_good_exists,"
         "mismatch\n";
  std::uint64_t rows = 0;
  std::uint64_t mismatches = 0;
  for (int n = 1; n <= o.nmax; ++n) {
    for (int s = 1; s <= n; ++s) {
      const bool good_expected = !is_exceptional_start(n, s);
      bool mismatch = false;
      std::string seq_cell;
      std::string graceful_cell;
      std::string class_cell;
      std::optional<bool> path_exists;
      std::optional<bool> good_exists;
      GoodSet cls;
      if (use_construct) {
        const Construction c = construct_path(n, s);
        const bool graceful = c.perm.start() == s && is_graceful_path(c.perm);
        cls = classify_good(c.perm);
        seq_cell = join(c.perm.values(), ' ');
        graceful_cell = graceful ? "true" : "false";
        class_cell = to_string(cls);
        if (!graceful || (good_expected && cls.empty())) mismatch = true;
      }
      if (use_oracle) {
        try {
          path_exists = exists_graceful_path(n, s, budget);
        } catch (const BudgetExhausted&) {
        }
        try {
          good_exists = exists_good(n, s, std::nullopt, budget);
        } catch (const BudgetExhausted&) {
        }
        if (path_exists != true) mismatch = true;
        if (good_exists != good_expected) mismatch = true;
        if (use_construct && !cls.empty() && good_exists != true) mismatch = true;
      }
      out << n << "," << s << "," << seq_cell << "," << graceful_cell << "," << class_cell << ","
          << (good_expected ? "true" : "false") << ","
          << (use_oracle ? verdict_cell(path_exists) : "") << ","
          << (use_oracle ? verdict_cell(good_exists) : "") << "," << (mismatch ? "true" : "false")
          << "\n";
      ++rows;
      if (mismatch) ++mismatches;
    }
  }
  out << "# rows=" << rows << " mismatches=" << mismatches << "\n";
  return mismatches == 0 ? kExitOk : kExitNegative;
}

struct StatsOptions {
  std::string set;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 42;
  bool exact = false;
};

json cycle_json(const RealSet& set, const CycleResult& r) {
  json j{{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}};
  if (r.outcome == CycleOutcome::Found) {
    j["cycle"] = rationals(r.cycle);
    std::vector<Rational> d = abs_diffs(r.cycle);
    d.push_back(abs(r.cycle.front() - r.cycle.back()));
    j["differences"] = rationals(d);
  }
  j["parity_obstructed"] = set.all_integers() ? json(cycle_parity_obstructed(set)) : json(nullptr);
  return j;
}

int cmd_stats(const StatsOptions& o, std::ostream& out) {
  const RealSet set = parse_set(o.set);
  const int n = set.n();
  if (n < 4) throw UsageError("stats needs a set of at least 4 elements");
  if (o.exact && n > kExactMaxSize) {
    throw UsageError("--exact is limited to sets of at most " + std::to_string(kExactMaxSize) +
                     " elements");
  }

  const BoundReport b = expectation_bound(set);
  const DiffSummary summary = diff_summary(set);
  const SumSLemma lemma = check_sum_s_lemma(set);

  json diff{{"distinct_positive_diffs", summary.distinct_diffs},
            {"sum_r", summary.sum_r},
            {"sum_r_squared", summary.sum_r_squared},
            {"sum_s3", summary.sum_s3}};
  if (n <= kTableDetailMaxN) {
    const DiffStats st = diff_stats(set);
    json rows = json::array();
    for (std::size_t i = 0; i < st.positive_diffs.size(); ++i) {
      rows.push_back({{"d", to_string(st.positive_diffs[i])}, {"r", st.r[i]}, {"s3", st.s3[i]}});
    }
    diff["table"] = std::move(rows);
  }

  json bound{{"term_main", to_string(b.term_main)},
             {"term_ap", to_string(b.term_ap)},
             {"term_ap_lemma", to_string(b.term_ap_lemma)},
             {"term_energy", to_string(b.term_energy)},
             {"bound_exact", to_string(b.bound_exact)},
             {"bound_exact_approx", approx(b.bound_exact)},
             {"bound_energy_form", to_string(b.bound_energy_form)},
             {"bound_energy_form_approx", approx(b.bound_energy_form)}};

  json result{{"n", n},
              {"diff_stats", std::move(diff)},
              {"energy", b.energy},
              {"c", to_string(b.c)},
              {"c_approx", approx(b.c)},
              {"bound", std::move(bound)},
              {"certificate_condition", b.certifies_cycle()},
              {"sum_s_lemma",
               {{"lhs", lemma.lhs}, {"rhs", to_string(lemma.rhs)}, {"ok", lemma.ok}}}};

  if (o.trials > 0) {
    const TrialReport t = monte_carlo_distinct(set, o.trials, o.seed);
    result["monte_carlo"] = {{"trials", t.trials},
                             {"seed", t.seed},
                             {"mean_distinct", to_string(t.mean_distinct)},
                             {"mean_distinct_approx", approx(t.mean_distinct)},
                             {"sample_variance", to_string(t.sample_variance)},
                             {"sample_stddev", t.sample_stddev},
                             {"min_distinct", t.min_distinct},
                             {"max_distinct", t.max_distinct}};
  }
  if (o.exact) {
    const Rational e = exact_expected_distinct(set);
    result["exact"] = {{"expected_distinct", to_string(e)},
                       {"expected_distinct_approx", approx(e)},
                       {"cycle_search", cycle_json(set, graceful_cycle_search(set))}};
  }

  json inputs{{"set", rationals(set.elements())},
              {"trials", o.trials},
              {"seed", o.seed},
              {"exact", o.exact}};
  out << record("stats", std::move(inputs), std::move(result)).dump(2) << "\n";
  return kExitOk;
}

struct CycleOptions {
  std::string set;
  std::optional<std::uint64_t> budget;
};

int cmd_cycle(const CycleOptions& o, std::ostream& out) {
  const RealSet set = parse_set(o.set);
  if (set.n() < 3) throw UsageError("cycle needs a set of at least 3 elements");
  const SearchBudget budget{o.budget.value_or(default_budget())};
  const CycleResult r = graceful_cycle_search(set, budget);
  json inputs{{"set", rationals(set.elements())}, {"budget", budget.max_nodes}};
  out << record("cycle", std::move(inputs), cycle_json(set, r)).dump(2) << "\n";
  return r.outcome == CycleOutcome::Found ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Graceful Hamiltonian paths over arithmetic progressions and finite sets"};
  app.name(args.empty() ? "gpath" : args.front());
  app.require_subcommand(1);

  ConstructOptions construct;
  auto* c = app.add_subcommand("construct", "Graceful path of [n] starting at s");
  c->add_option("n", construct.n, "Ground set size")->required();
  c->add_option("s", construct.s, "Start element")->required();
  c->add_option("--ap", construct.ap, "Map through the progression first,step");
  c->add_flag("--trace", construct.trace, "Include the rule applications");
  c->add_option("--format", construct.format)
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Check a sequence over a set");
  v->add_option("--set", verify.set, "Inline list/range or a file")->required();
  v->add_option("--seq", verify.seq, "Inline list, or - for the first line of stdin")->required();
  v->add_flag("--cycle", verify.cycle, "Include the wrap-around difference");

  SweepOptions sweep;
  auto* w = app.add_subcommand("sweep", "Check every (n, s) up to nmax");
  w->add_option("nmax", sweep.nmax)->required();
  w->add_option("--mode", sweep.mode)
      ->check(CLI::IsMember({"construct", "oracle", "both"}))
      ->capture_default_str();
  w->add_option("--format", sweep.format)->check(CLI::IsMember({"csv"}))->capture_default_str();

  StatsOptions stats;
  auto* st = app.add_subcommand("stats", "Difference statistics, bounds and Monte Carlo");
  st->add_option("--set", stats.set)->required();
  st->add_option("--trials", stats.trials, "Monte Carlo trials (0 skips)")->capture_default_str();
  st->add_option("--seed", stats.seed)->capture_default_str();
  st->add_flag("--exact", stats.exact, "Enumerate all circular arrangements (|A| <= 8)");

  CycleOptions cycle;
  auto* cy = app.add_subcommand("cycle", "Search for a graceful Hamiltonian cycle");
  cy->add_option("--set", cycle.set)->required();
  cy->add_option("--budget", cycle.budget, "Node limit (0 = unlimited)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*c) return cmd_construct(construct, out);
    if (*v) return cmd_verify(verify, out, in);
    if (*w) return cmd_sweep(sweep, out);
    if (*st) return cmd_stats(stats, out);
    if (*cy) return cmd_cycle(cycle, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace gpath::cli
