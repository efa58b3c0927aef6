// Acceptance harness: one [PASS]/[FAIL] line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "paramat/audit.hpp"
#include "paramat/para.hpp"
#include "paramat/semantics.hpp"

using namespace paramat;

namespace {

struct Result {
  bool passed = false;
  std::string detail;
};

Formula f(std::string_view s) { return parse_formula(s); }

// 1 ---------------------------------------------------------------------------

Result truth_tables() {
  std::size_t cells = 0;
  std::size_t wrong = 0;
  const std::pair<const char*, const oracle::PrintedTable*> tables[] = {
      {"l3", &oracle::printed_l3()}, {"g3", &oracle::printed_g3()}, {"k3", &oracle::printed_k3()}};
  for (const auto& [name, table] : tables) {
    const Matrix m = builtin(name);
    for (const auto& row : *table) {
      const Valuation v{{"p", oracle::token(row.x)}, {"q", oracle::token(row.y)}};
      auto check = [&](const char* formula, const char* expected) {
        ++cells;
        if (eval(m, v, f(formula)) != oracle::token(expected)) ++wrong;
      };
      if (*row.neg) check("~q", row.neg);
      check("p | q", row.disj);
      check("p & q", row.conj);
      check("p -> q", row.imp);
    }
  }
  return {wrong == 0, std::to_string(cells) + " cells, " + std::to_string(wrong) + " mismatches"};
}

// 2 ---------------------------------------------------------------------------

Result witness_suite() {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first_failure;
  for (const char* name : {"l3", "g3", "k3"}) {
    const auto report = verify_witness_suite(LogicSpec{builtin(name), 1});
    for (const auto& c : report.checks) {
      ++total;
      if (!c.passed) {
        ++failed;
        if (first_failure.empty()) first_failure = "; first failure: " + c.name;
      }
    }
  }
  return {failed == 0 && total >= 14,
          std::to_string(total - failed) + "/" + std::to_string(total) + " witnesses replayed" + first_failure};
}

// 3 ---------------------------------------------------------------------------

Result summary_table() {
  const AuditReport report = run_table(Budget{});
  std::set<std::string> flagged;
  bool all_replayed = true;
  for (const auto& d : report.discrepancies) {
    flagged.insert(d.cell());
    all_replayed = all_replayed && d.replayed;
  }
  const std::vector<std::string> required{"joint_consistency/P(L3)", "joint_consistency/P(G3)",
                                          "joint_consistency/P(K3)", "modified_full_dt/P(L3)"};
  const bool has_required =
      std::all_of(required.begin(), required.end(), [&](const std::string& c) { return flagged.count(c) > 0; });
  const bool filled = report.verdicts.size() == 96;
  std::string cells;
  for (const auto& c : flagged) cells += (cells.empty() ? "" : ", ") + c;
  return {filled && has_required && all_replayed && !report.has_unexpected_discrepancies(),
          std::to_string(96 - flagged.size()) + "/96 cells match; flagged: " + cells};
}

// 4 ---------------------------------------------------------------------------

/// All formulas of depth <= 2 over {p, q}, grouped by their designated rows
/// over the nine valuations of {p, q}. P-consequence depends on the premises
/// and the conclusion only through these rows, so every premise set is
/// covered by a multiset of classes with distinct members per repeat.
struct Classes {
  std::vector<std::vector<Formula>> members;
  std::vector<std::uint32_t> masks;
};

Classes classify_formulas(const Matrix& m) {
  const std::vector<std::string> names{"p", "q"};
  const auto rows = oracle::assignments(m, names);
  std::map<std::uint32_t, std::size_t> index;
  Classes out;
  for (const auto& x : enumerate_formulas({"p", "q"}, 2)) {
    std::uint32_t mask = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (m.is_designated(oracle::value_of(m, x, rows[r]))) mask |= 1u << r;
    auto [it, fresh] = index.emplace(mask, out.masks.size());
    if (fresh) {
      out.masks.push_back(mask);
      out.members.emplace_back();
    }
    out.members[it->second].push_back(x);
  }
  return out;
}

/// All-subsets decision on designated rows: holds iff some subset has a
/// common model and all its common models designate the conclusion. The
/// witness is the least qualifying subset by size, then index order.
std::optional<std::vector<std::size_t>> mask_oracle(const std::vector<std::uint32_t>& gamma, std::uint32_t alpha,
                                                    std::uint32_t full) {
  const std::size_t n = gamma.size();
  std::optional<std::vector<std::size_t>> best;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::uint32_t common = full;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i) & 1u) {
        common &= gamma[i];
        subset.push_back(i);
      }
    }
    if (common == 0 || (common & ~alpha) != 0) continue;
    if (!best || subset.size() < best->size() || (subset.size() == best->size() && subset < *best))
      best = std::move(subset);
  }
  return best;
}

struct OracleRun {
  std::size_t sets = 0;
  std::size_t queries = 0;
  std::size_t disagreements = 0;
  std::size_t classes = 0;
};

OracleRun oracle_equivalence(const Matrix& m) {
  const Classes classes = classify_formulas(m);
  const std::size_t k = classes.masks.size();
  const std::uint32_t full = (1u << 9) - 1;
  OracleRun run;
  run.classes = k;
  std::vector<std::size_t> picks;

  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    std::vector<std::pair<Formula, std::uint32_t>> items;
    std::map<std::size_t, std::size_t> used;
    bool realisable = true;
    for (auto c : picks) {
      const std::size_t nth = used[c]++;
      if (nth >= classes.members[c].size()) {
        realisable = false;
        break;
      }
      items.emplace_back(classes.members[c][nth], classes.masks[c]);
    }
    if (realisable) {
      std::sort(items.begin(), items.end());
      std::vector<Formula> formulas;
      std::vector<std::uint32_t> masks;
      for (const auto& [x, mask] : items) {
        formulas.push_back(x);
        masks.push_back(mask);
      }
      const FormulaSet gamma(std::move(formulas));
      ++run.sets;
      for (std::size_t a = 0; a < k; ++a) {
        const Formula& alpha = classes.members[a].front();
        const auto got = para_entails(m, gamma, alpha);
        const auto want = mask_oracle(masks, classes.masks[a], full);
        ++run.queries;
        bool same = got.holds == want.has_value();
        if (same && want) {
          std::vector<Formula> expected;
          for (auto i : *want) expected.push_back(gamma[i]);
          same = got.witness == FormulaSet(std::move(expected));
        }
        if (!same) ++run.disagreements;
      }
    }
    if (picks.size() == 4) return;
    for (std::size_t c = from; c < k; ++c) {
      picks.push_back(c);
      extend(c);
      picks.pop_back();
    }
  };
  extend(0);
  return run;
}

Result oracle_criterion() {
  std::string detail;
  bool ok = true;
  for (const char* name : {"l3", "k3"}) {
    const OracleRun r = oracle_equivalence(builtin(name));
    ok = ok && r.disagreements == 0 && r.sets > 0;
    detail += std::string(detail.empty() ? "" : "; ") + name + ": " + std::to_string(r.classes) + " classes, " +
              std::to_string(r.sets) + " premise sets, " + std::to_string(r.queries) + " queries, " +
              std::to_string(r.disagreements) + " disagreements";
  }
  return {ok, detail};
}

// 5, 6 ------------------------------------------------------------------------

const LetterSet kPool{"p", "q", "r"};

FormulaSet random_set(std::mt19937_64& rng, std::size_t max_size) {
  std::vector<Formula> items;
  const std::size_t n = rng() % (max_size + 1);
  for (std::size_t i = 0; i < n; ++i) items.push_back(random_formula(kPool, 3, rng));
  return FormulaSet(std::move(items));
}

Formula derived(std::mt19937_64& rng, const Formula& a) {
  switch (rng() % 5) {
    case 0: return a;
    case 1: return Formula::disj(a, random_formula(kPool, 2, rng));
    case 2: return Formula::disj(random_formula(kPool, 2, rng), a);
    case 3: return Formula::imp(random_formula(kPool, 2, rng), a);
    default: return random_formula(kPool, 3, rng);
  }
}

Result p_idempotence() {
  std::size_t disagreements = 0;
  std::size_t queries = 0;
  for (const char* name : {"l3", "g3", "k3"}) {
    const Matrix m = builtin(name);
    std::mt19937_64 rng(500 + m.size() + name[0]);
    for (int i = 0; i < 500; ++i, ++queries) {
      const FormulaSet g = random_set(rng, 5);
      const Formula a = g.empty() || rng() % 2 ? random_formula(kPool, 3, rng) : derived(rng, g[rng() % g.size()]);
      if (logic_entails(LogicSpec{m, 1}, g, a) != logic_entails(LogicSpec{m, 2}, g, a)) ++disagreements;
    }
  }
  return {disagreements == 0, std::to_string(queries) + " queries, " + std::to_string(disagreements) + " disagreements"};
}

Result weak_transitivity() {
  std::size_t chains = 0;
  std::size_t violations = 0;
  std::string counts;
  for (const auto& logic : table_columns()) {
    std::mt19937_64 rng(600 + logic.para_depth);
    std::size_t found = 0;
    for (std::size_t attempt = 0; found < 500 && attempt < 200000; ++attempt) {
      const Formula a = random_formula(kPool, 3, rng);
      const Formula b = derived(rng, a);
      if (!logic_entails(logic, FormulaSet{a}, b)) continue;
      const Formula c = derived(rng, b);
      if (!logic_entails(logic, FormulaSet{b}, c)) continue;
      ++found;
      if (!logic_entails(logic, FormulaSet{a}, c)) ++violations;
    }
    chains += found;
    counts += (counts.empty() ? "" : ", ") + logic.name() + " " + std::to_string(found);
  }
  return {violations == 0 && chains == 500 * 6,
          "chains: " + counts + "; " + std::to_string(violations) + " violations"};
}

// 7 ---------------------------------------------------------------------------

Result k3_tautology_free() {
  const Matrix k3 = builtin("k3");
  const Valuation half{{"p", Value(1, 2)}, {"q", Value(1, 2)}};
  std::size_t n = 0;
  std::size_t exceptions = 0;
  enumerate_formulas({"p", "q"}, 3, [&](const Formula& x) {
    ++n;
    if (eval(k3, half, x) != Value(1, 2)) ++exceptions;
    return true;
  });
  const bool library = tautology_free_check(k3, {"p", "q"}, 3);
  return {exceptions == 0 && library && n == oracle::formula_count(2, 3),
          std::to_string(n) + " formulas, " + std::to_string(exceptions) + " exceptions"};
}

// 8 ---------------------------------------------------------------------------

Result classical_sanity() {
  const Matrix cl2 = builtin("cl2");
  const std::vector<FormulaSet> premises{{}, parse_formula_set("p"), parse_formula_set("~q"),
                                         parse_formula_set("p -> q")};
  const Formula q = f("q");
  std::size_t queries = 0;
  std::size_t disagreements = 0;
  enumerate_formulas({"p", "q"}, 3, [&](const Formula& a) {
    for (const auto& g : premises) {
      ++queries;
      if (entails(cl2, g, a).holds != oracle::classical_entails(g, a)) ++disagreements;
    }
    ++queries;
    if (entails(cl2, FormulaSet{a}, q).holds != oracle::classical_entails(FormulaSet{a}, q)) ++disagreements;
    return true;
  });
  const bool families = lukasiewicz(2) == cl2 && goedel(2) == cl2;
  return {disagreements == 0 && families,
          std::to_string(queries) + " queries, " + std::to_string(disagreements) + " disagreements; L2 = G2 = CL2: " +
              (families ? "yes" : "no")};
}

// 9 ---------------------------------------------------------------------------

Result normality() {
  Budget budget;
  bool ok = true;
  std::string failures;
  auto require = [&](const LogicSpec& logic, PropertyId p) {
    const Verdict v = check_property(logic, p, budget);
    const bool holds = v.outcome == paramat::Outcome::Holds && v.samples_run >= 500;
    if (!holds) failures += " " + to_string(p) + "/" + logic.name();
    ok = ok && holds;
  };
  for (const char* name : {"l3", "g3", "k3"}) {
    const LogicSpec base{builtin(name), 0};
    require(base, PropertyId::Inclusion);
    require(base, PropertyId::Monotonicity);
    require(base, PropertyId::Idempotency);
    require(LogicSpec{builtin(name), 1}, PropertyId::Monotonicity);
  }
  return {ok, ok ? "12 properties held on 500 samples each" : "failed:" + failures};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double limit_seconds;
    Result (*run)();
  };
  const Criterion criteria[] = {
      {1, "truth-table identity", 1, truth_tables},
      {2, "witness suite", 5, witness_suite},
      {3, "summary-table reproduction", 120, summary_table},
      {4, "MSS decision equals all-subsets oracle", 120, oracle_criterion},
      {5, "P-idempotence", 0, p_idempotence},
      {6, "weak transitivity", 0, weak_transitivity},
      {7, "K3 tautology-freeness", 30, k3_tautology_free},
      {8, "classical sanity", 0, classical_sanity},
      {9, "normality sampling", 0, normality},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool passed = o.passed && in_time;
    if (!passed) ++failed;
    std::printf("[%s] criterion %d: %s (%.2f s%s) %s\n", passed ? "PASS" : "FAIL", c.number, c.title, seconds,
                in_time ? "" : ", over time limit", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
