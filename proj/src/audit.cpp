#include <algorithm>

#include "paramat/audit.hpp"
#include "paramat/error.hpp"
#include "paramat/semantics.hpp"

namespace paramat {

namespace {

struct PropertyInfo {
  PropertyId id;
  const char* name;
  const char* label;
  // L3, P(L3), G3, P(G3), K3, P(K3)
  std::array<bool, 6> published;
};

constexpr std::array<PropertyInfo, kPropertyCount> kProperties{{
    {PropertyId::Explosive, "explosive", "explosive property", {1, 0, 1, 0, 1, 0}},
    {PropertyId::JointConsistency, "joint_consistency", "joint consistency", {1, 1, 1, 1, 1, 1}},
    {PropertyId::ConjunctiveProperty, "conjunctive_property", "conjunctive property", {1, 0, 1, 0, 1, 0}},
    {PropertyId::Paraconsistent, "paraconsistent", "paraconsistent", {0, 1, 0, 1, 0, 1}},
    {PropertyId::InconsistentSetsExist, "inconsistent_sets_exist", "inconsistent sets", {1, 0, 1, 0, 1, 0}},
    {PropertyId::PIdempotent, "p_idempotent", "P(P(L)) = P(L)", {1, 1, 1, 1, 1, 1}},
    {PropertyId::Inclusion, "inclusion", "inclusion", {1, 0, 1, 0, 1, 0}},
    {PropertyId::Monotonicity, "monotonicity", "monotonicity", {1, 1, 1, 1, 1, 1}},
    {PropertyId::Idempotency, "idempotency", "idempotency", {1, 0, 1, 0, 1, 0}},
    {PropertyId::Transitivity, "transitivity", "transitivity", {1, 0, 1, 0, 1, 0}},
    {PropertyId::WeakTransitivity, "weak_transitivity", "weak transitivity", {1, 1, 1, 1, 1, 1}},
    {PropertyId::ModusPonens, "modus_ponens", "modus ponens", {1, 0, 1, 0, 1, 0}},
    {PropertyId::FullDt, "full_dt", "full deduction theorem", {0, 0, 1, 0, 0, 0}},
    {PropertyId::ModifiedFullDt, "modified_full_dt", "modified full deduction theorem", {1, 1, 1, 0, 0, 0}},
    {PropertyId::WeakDtFwd, "weak_dt_fwd", "weak deduction theorem (=>)", {0, 0, 1, 1, 0, 0}},
    {PropertyId::ModifiedWeakDtFwd, "modified_weak_dt_fwd", "modified weak deduction theorem (=>)",
     {1, 1, 1, 1, 0, 0}},
}};

const PropertyInfo& info(PropertyId p) { return kProperties.at(static_cast<std::size_t>(p)); }

bool matches(Outcome computed, bool published) {
  return (computed == Outcome::Holds && published) || (computed == Outcome::Fails && !published);
}

}  // namespace

const std::array<PropertyId, kPropertyCount>& all_properties() {
  static const auto ids = [] {
    std::array<PropertyId, kPropertyCount> out{};
    for (std::size_t i = 0; i < kPropertyCount; ++i) out[i] = kProperties[i].id;
    return out;
  }();
  return ids;
}

std::string to_string(PropertyId p) { return info(p).name; }
std::string label(PropertyId p) { return info(p).label; }

std::optional<PropertyId> property_from_string(std::string_view id) {
  for (const auto& row : kProperties)
    if (id == row.name) return row.id;
  return std::nullopt;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "HOLDS";
    case Outcome::Fails: return "FAILS";
    case Outcome::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Exact: return "EXACT";
    case Method::Witness: return "WITNESS";
    case Method::Sampled: return "SAMPLED";
    case Method::Bounded: return "BOUNDED";
  }
  return "SAMPLED";
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (Outcome o : {Outcome::Holds, Outcome::Fails, Outcome::Undecided})
    if (s == to_string(o)) return o;
  return std::nullopt;
}

std::optional<Method> method_from_string(std::string_view s) {
  for (Method m : {Method::Exact, Method::Witness, Method::Sampled, Method::Bounded})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

void Budget::validate() const {
  if (samples == 0 || depth == 0 || letters == 0 || gamma_size == 0)
    throw PreconditionError("budget limits must be positive");
  if (letters > 8) throw PreconditionError("budget allows at most 8 letters");
  if (gamma_size > kDefaultSubsetBound) throw PreconditionError("budget gamma size above subset bound");
}

LetterSet Budget::letter_pool() const {
  static constexpr std::array<const char*, 8> kPool{"p", "q", "r", "s", "t", "u", "v", "w"};
  LetterSet out;
  for (std::size_t i = 0; i < std::min<std::size_t>(letters, kPool.size()); ++i) out.insert(kPool[i]);
  return out;
}

const Verdict& AuditReport::at(PropertyId p, std::size_t column) const {
  if (column >= columns.size()) throw PreconditionError("column out of range");
  return verdicts.at(static_cast<std::size_t>(p) * columns.size() + column);
}

bool AuditReport::has_unexpected_discrepancies() const {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& d) { return !d.known || !d.replayed; });
}

std::vector<LogicSpec> table_columns() {
  std::vector<LogicSpec> out;
  for (const char* name : {"l3", "g3", "k3"}) {
    out.push_back(LogicSpec{builtin(name), 0});
    out.push_back(LogicSpec{builtin(name), 1});
  }
  return out;
}

bool published_value(PropertyId p, std::size_t column) { return info(p).published.at(column); }

const std::vector<std::string>& known_discrepancies() {
  static const std::vector<std::string> cells{
      "joint_consistency/P(L3)",
      "joint_consistency/P(G3)",
      "joint_consistency/P(K3)",
      "modified_full_dt/P(L3)",
  };
  return cells;
}

namespace {

AuditReport grid(const std::vector<LogicSpec>& columns, const Budget& budget) {
  budget.validate();
  AuditReport report;
  report.budget = budget;
  for (const auto& c : columns) report.columns.push_back(c.name());
  for (PropertyId p : all_properties())
    for (const auto& c : columns) report.verdicts.push_back(check_property(c, p, budget));
  return report;
}

}  // namespace

AuditReport run_table(const Budget& budget) {
  const auto columns = table_columns();
  AuditReport report = grid(columns, budget);
  const auto& known = known_discrepancies();
  for (PropertyId p : all_properties()) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Verdict& v = report.at(p, c);
      const bool published = published_value(p, c);
      if (matches(v.outcome, published)) continue;
      Discrepancy d;
      d.property = p;
      d.logic = v.logic;
      d.published_value = published;
      d.computed = v.outcome;
      d.evidence = v.witness ? v.witness->description : v.note;
      d.replayed = v.outcome != Outcome::Undecided && v.witness.has_value() && replay(columns[c], v);
      d.known = std::find(known.begin(), known.end(), d.cell()) != known.end();
      report.discrepancies.push_back(std::move(d));
    }
  }
  return report;
}

AuditReport audit_logic(const Matrix& base, const Budget& budget) {
  AuditReport report = grid({LogicSpec{base, 0}, LogicSpec{base, 1}}, budget);
  report.compared_with_table = false;
  const auto names = builtin_names();
  const bool three_valued_builtin =
      std::any_of(names.begin(), names.end(), [&](const auto& n) { return n != "cl2" && builtin(n) == base; });
  if (!three_valued_builtin) {
    for (auto& v : report.verdicts) {
      if (!v.note.empty()) v.note += "; ";
      v.note += "extension beyond the summary table";
    }
  }
  return report;
}

bool WitnessSuiteReport::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const WitnessCheck& c) { return c.passed; });
}

namespace {

Formula f(std::string_view text) { return parse_formula(text); }
FormulaSet fs(std::string_view text) { return parse_formula_set(text); }

class Suite {
 public:
  explicit Suite(Matrix m) : m_(std::move(m)), base_{m_, 0}, para_{m_, 1} {}

  void add(std::string name, bool passed) { report_.checks.push_back({std::move(name), passed}); }

  bool base_entails(std::string_view g, std::string_view a) const { return entails(m_, fs(g), f(a)).holds; }
  bool para(std::string_view g, std::string_view a) const { return para_entails(m_, fs(g), f(a)).holds; }
  bool fails(const LogicSpec& spec, PropertyId p, Witness w) const {
    Verdict v;
    v.property = p;
    v.logic = spec.name();
    v.para_depth = spec.para_depth;
    v.outcome = Outcome::Fails;
    v.method = Method::Witness;
    v.witness = std::move(w);
    return replay(spec, v);
  }

  void explosion() {
    add("{p, ~p} has no " + m_.name() + " model", !is_consistent(m_, fs("p, ~p")));
    add("condition (*) holds in " + m_.name(), has_star_property(m_));
    add("{p, ~p} entails q in " + m_.name(), base_entails("p, ~p", "q"));
  }

  void para_common() {
    const std::string P = para_.name();
    add("{p, ~p} entails p and ~p in " + P, para("p, ~p", "p") && para("p, ~p", "~p"));
    add("{p, ~p} does not entail q in " + P, !para("p, ~p", "q"));
    add("{p | q, ~p} entails q in " + m_.name(), base_entails("p | q, ~p", "q"));
    add("transitivity fails in " + P + " via G = {p, ~p}, D = {p | q, ~p}, q",
        fails(para_, PropertyId::Transitivity, Witness{"", fs("p, ~p"), fs("p | q, ~p"), {f("q")}}));
    add("maximal consistent subsets of {p, ~p} are {p} and {~p}",
        maximal_consistent_subsets(m_, fs("p, ~p")) == std::vector<FormulaSet>{fs("p"), fs("~p")});
    add("P(P(" + m_.name() + ")) agrees with " + P + " on {p, ~p} => q",
        logic_entails(LogicSpec{m_, 2}, fs("p, ~p"), f("q")) == para("p, ~p", "q"));
    add("modus ponens fails in " + P + " for {p, ~p & (p -> q)}",
        fails(para_, PropertyId::ModusPonens, Witness{"", fs("p, ~p & (p -> q)"), {}, {f("p"), f("q")}}));
  }

  WitnessSuiteReport done() && { return std::move(report_); }

  const Matrix m_;
  const LogicSpec base_;
  const LogicSpec para_;

 private:
  WitnessSuiteReport report_;
};

WitnessSuiteReport l3_suite(const LogicSpec& logic) {
  Suite s(logic.matrix);
  s.explosion();
  s.para_common();
  s.add("{~(p -> p)} has no L3 model", !is_consistent(s.m_, fs("~(p -> p)")));
  s.add("{~(p -> p)} does not entail ~(p -> p) in P(L3)", !s.para("~(p -> p)", "~(p -> p)"));
  s.add("inclusion fails in P(L3)", s.fails(s.para_, PropertyId::Inclusion, Witness{"", fs("~(p -> p)"), {}, {f("~(p -> p)")}}));
  s.add("~p takes 1/2 when p does in L3", eval(s.m_, {{"p", Value(1, 2)}}, f("~p")) == Value(1, 2));
  s.add("{p, q} entails p & q and {p} entails q -> (q -> p & q) in L3",
        s.base_entails("p, q", "p & q") && s.base_entails("p", "q -> (q -> p & q)"));
  s.add("{} entails ~(p -> p) -> (~(p -> p) -> ~(p -> p)) in P(L3) but {~(p -> p)} does not entail ~(p -> p)",
        s.para("", "~(p -> p) -> (~(p -> p) -> ~(p -> p))") && !s.para("~(p -> p)", "~(p -> p)"));
  s.add("modified full deduction theorem fails in P(L3)",
        s.fails(s.para_, PropertyId::ModifiedFullDt, Witness{"", {}, {}, {f("~(p -> p)"), f("~(p -> p)")}}));
  s.add("full deduction theorem fails in L3 via {p -> (p -> q)}, p, q",
        s.fails(s.base_, PropertyId::FullDt, Witness{"", fs("p -> (p -> q)"), {}, {f("p"), f("q")}}));
  return std::move(s).done();
}

WitnessSuiteReport g3_suite(const LogicSpec& logic) {
  Suite s(logic.matrix);
  s.explosion();
  s.para_common();
  s.add("~p takes 0 when p takes 1/2 in G3", eval(s.m_, {{"p", Value(1, 2)}}, f("~p")) == Value(0));
  s.add("p & ~p is a G3 contradiction", classify(s.m_, f("p & ~p")) == Classification::Contradiction);
  s.add("(p & ~p) -> (p & ~p) is a G3 tautology",
        classify(s.m_, f("(p & ~p) -> (p & ~p)")) == Classification::Tautology);
  s.add("{p & ~p} does not entail p & ~p in P(G3)", !s.para("p & ~p", "p & ~p"));
  s.add("{p, q} entails p & q and {p} entails q -> p & q in G3",
        s.base_entails("p, q", "p & q") && s.base_entails("p", "q -> p & q"));
  {
    Budget budget;
    budget.samples = 200;
    const Verdict dt = check_deduction_variant(s.base_, PropertyId::FullDt, budget);
    s.add("full deduction theorem holds on 200 G3 samples", dt.outcome == Outcome::Holds);
  }
  s.add("modified full deduction theorem fails in P(G3)",
        s.fails(s.para_, PropertyId::ModifiedFullDt, Witness{"", {}, {}, {f("p & ~p"), f("p & ~p")}}));
  return std::move(s).done();
}

WitnessSuiteReport k3_suite(const LogicSpec& logic) {
  Suite s(logic.matrix);
  s.explosion();
  s.para_common();
  const auto pp = entails(s.m_, {}, f("p -> p"));
  s.add("p -> p is not a K3 tautology (countermodel p=1/2)",
        !pp.holds && pp.countermodel && pp.countermodel->at("p") == Value(1, 2));
  s.add("Cn(K3)({}) is empty on formulas over {p} up to depth 3", tautology_free_check(s.m_, LetterSet{"p"}, 3));
  s.add("Cn(K3)({}) is empty on formulas over {p, q} up to depth 2",
        tautology_free_check(s.m_, LetterSet{"p", "q"}, 2));
  s.add("p & ~p is satisfiable in K3, so not a contradiction",
        classify(s.m_, f("p & ~p")) != Classification::Contradiction);
  s.add("{p} entails p but {} does not entail p -> p in K3",
        s.base_entails("p", "p") && !s.base_entails("", "p -> p"));
  s.add("weak deduction theorem fails in K3",
        s.fails(s.base_, PropertyId::WeakDtFwd, Witness{"", {}, {}, {f("p"), f("p")}}));
  s.add("{p & ~p} does not entail p & ~p in P(K3)", !s.para("p & ~p", "p & ~p"));
  s.add("the only consistent subset of {p & ~p} in K3 is {}",
        consistent_subsets(s.m_, fs("p & ~p")) == std::vector<FormulaSet>{FormulaSet{}});
  return std::move(s).done();
}

}  // namespace

WitnessSuiteReport verify_witness_suite(const LogicSpec& logic) {
  WitnessSuiteReport report;
  if (logic.matrix == builtin("l3")) report = l3_suite(logic);
  else if (logic.matrix == builtin("g3")) report = g3_suite(logic);
  else if (logic.matrix == builtin("k3")) report = k3_suite(logic);
  else report.checks.push_back({"no stored witnesses for " + logic.matrix.name(), false});
  report.logic = logic.name();
  return report;
}

}  // namespace paramat
