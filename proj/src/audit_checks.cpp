#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "paramat/audit.hpp"
#include "paramat/error.hpp"
#include "paramat/semantics.hpp"

namespace paramat {

namespace {

Formula f(std::string_view text) { return parse_formula(text); }
FormulaSet fs(std::string_view text) { return parse_formula_set(text); }

std::mt19937_64 seeded_rng(const Budget& budget, PropertyId p, unsigned depth) {
  std::seed_seq seq{static_cast<std::uint32_t>(budget.seed), static_cast<std::uint32_t>(budget.seed >> 32),
                    static_cast<std::uint32_t>(p), depth};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------
// Replayable predicates. Each takes the logic and a witness and recomputes the
// claim from scratch.

bool entails_at(const LogicSpec& spec, const FormulaSet& g, const Formula& a) { return logic_entails(spec, g, a); }
bool consistent_at(const LogicSpec& spec, const FormulaSet& g) { return logic_consistent(spec, g); }

/// For universal properties: true iff `w` is a counterexample.
bool refutes(const LogicSpec& spec, PropertyId p, const Witness& w) {
  const auto& xs = w.formulas;
  auto need = [&](std::size_t n) { return xs.size() >= n; };
  switch (p) {
    case PropertyId::Inclusion:
      return need(1) && w.gamma.contains(xs[0]) && !entails_at(spec, w.gamma, xs[0]);
    case PropertyId::Monotonicity:
      return need(1) && entails_at(spec, w.gamma, xs[0]) && !entails_at(spec, w.gamma.united(w.delta), xs[0]);
    case PropertyId::Idempotency:
    case PropertyId::Transitivity:
      // delta lies inside Cn(gamma), delta yields a, gamma does not.
      if (!need(1)) return false;
      for (const auto& d : w.delta)
        if (!entails_at(spec, w.gamma, d)) return false;
      return entails_at(spec, w.delta, xs[0]) && !entails_at(spec, w.gamma, xs[0]);
    case PropertyId::WeakTransitivity:
      return need(3) && entails_at(spec, FormulaSet{xs[0]}, xs[1]) && entails_at(spec, FormulaSet{xs[1]}, xs[2]) &&
             !entails_at(spec, FormulaSet{xs[0]}, xs[2]);
    case PropertyId::ModusPonens:
      return need(2) && entails_at(spec, w.gamma, xs[0]) && entails_at(spec, w.gamma, Formula::imp(xs[0], xs[1])) &&
             !entails_at(spec, w.gamma, xs[1]);
    case PropertyId::FullDt:
    case PropertyId::ModifiedFullDt:
    case PropertyId::WeakDtFwd:
    case PropertyId::ModifiedWeakDtFwd: {
      if (!need(2)) return false;
      const bool modified = p == PropertyId::ModifiedFullDt || p == PropertyId::ModifiedWeakDtFwd;
      const Formula& a = xs[0];
      const Formula& b = xs[1];
      const Formula conditional = modified ? Formula::imp(a, Formula::imp(a, b)) : Formula::imp(a, b);
      const bool premise_side = entails_at(spec, w.gamma.with(a), b);
      const bool conditional_side = entails_at(spec, w.gamma, conditional);
      if (p == PropertyId::FullDt || p == PropertyId::ModifiedFullDt) return premise_side != conditional_side;
      return premise_side && !conditional_side;
    }
    case PropertyId::PIdempotent:
      return need(1) && entails_at(LogicSpec{spec.matrix, 1}, w.gamma, xs[0]) !=
                            entails_at(LogicSpec{spec.matrix, 2}, w.gamma, xs[0]);
    default: return false;
  }
}

/// {x, ~x} both follow from a consistent A: gamma = A, formulas = [x].
bool shows_paraconsistency(const LogicSpec& spec, const Witness& w) {
  if (w.formulas.empty()) return false;
  const Formula& x = w.formulas[0];
  return entails_at(spec, w.gamma, x) && entails_at(spec, w.gamma, Formula::neg(x)) && consistent_at(spec, w.gamma);
}

bool shows_joint_consistency(const LogicSpec& spec, const Witness& w) {
  if (w.formulas.empty()) return false;
  const Formula& x = w.formulas[0];
  const Formula nx = Formula::neg(x);
  return consistent_at(spec, FormulaSet{x}) && consistent_at(spec, FormulaSet{nx}) &&
         !consistent_at(spec, FormulaSet{x, nx});
}

/// Explosion via condition (*): only meaningful for the base level.
bool star_evidence(const LogicSpec& spec) { return spec.para_depth == 0 && has_star_property(spec.matrix); }

/// Every set is consistent above level 0; the witness lists sample sets that
/// are inconsistent at level 0 and checks they are consistent here.
bool no_inconsistent_sets_evidence(const LogicSpec& spec, const Witness& w) {
  if (spec.para_depth == 0) return false;
  if (!consistent_at(spec, w.gamma)) return false;
  return std::all_of(w.formulas.begin(), w.formulas.end(),
                     [&](const Formula& x) { return consistent_at(spec, FormulaSet{x}); });
}

// ---------------------------------------------------------------------------
// Bounded search for a single formula z with Cn({z}) = Cn(pair).

/// Number of formulas over `n` letters with depth <= d.
std::size_t formula_count(std::size_t n, unsigned d) {
  std::size_t c = n;
  for (unsigned k = 0; k < d; ++k) c = n + c + 3 * c * c;
  return c;
}

struct ConjunctionSearch {
  std::size_t formulas_covered = 0;
  std::size_t classes = 0;
  std::optional<Formula> survivor;
};

/// Enumerates every z over letters(pair) and letters(probes) up to `depth`,
/// grouped by truth-value column (z's consequences depend on nothing else),
/// and keeps the first z whose consequences agree with the pair's on every
/// probe.
ConjunctionSearch search_conjunction(const LogicSpec& spec, const FormulaSet& pair, const std::vector<Formula>& probes,
                                     unsigned depth) {
  LetterSet domain = letters(pair);
  for (const auto& p : probes) domain.merge(letters(p));
  const Matrix& m = spec.matrix;
  ValuationSpace space(m, domain);

  std::vector<bool> expected;
  for (const auto& p : probes) expected.push_back(entails_at(spec, pair, p));

  using Column = std::vector<std::uint8_t>;
  std::map<Column, Formula> seen;
  std::vector<std::pair<Column, Formula>> known;
  for (const auto& name : domain) {
    Formula x = Formula::letter(name);
    Column c = space.column(x);
    if (seen.emplace(c, x).second) known.emplace_back(std::move(c), x);
  }
  for (unsigned d = 1; d <= depth; ++d) {
    const std::size_t n = known.size();
    auto add = [&](Column c, const std::function<Formula()>& build) {
      if (seen.count(c)) return;
      Formula x = build();
      seen.emplace(c, x);
      known.emplace_back(std::move(c), std::move(x));
    };
    for (std::size_t i = 0; i < n; ++i) {
      Column c = known[i].first;
      for (auto& v : c) v = m.neg_at(v);
      add(std::move(c), [&] { return Formula::neg(known[i].second); });
    }
    for (Connective op : {Connective::Or, Connective::And, Connective::Imp}) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Column c(space.size());
          for (std::size_t r = 0; r < c.size(); ++r) c[r] = m.apply_at(op, known[i].first[r], known[j].first[r]);
          add(std::move(c), [&] { return Formula::binary(op, known[i].second, known[j].second); });
        }
      }
    }
  }

  ConjunctionSearch out;
  out.formulas_covered = formula_count(domain.size(), depth);
  out.classes = known.size();
  for (const auto& [col, z] : known) {
    bool agrees = true;
    for (std::size_t i = 0; i < probes.size() && agrees; ++i)
      agrees = entails_at(spec, FormulaSet{z}, probes[i]) == expected[i];
    if (agrees) {
      out.survivor = z;
      break;
    }
  }
  return out;
}

/// Model-set equality: at level 0 this is exactly Cn({x, y}) = Cn({z}).
bool same_models(const Matrix& m, const FormulaSet& a, const FormulaSet& b) {
  LetterSet domain = letters(a);
  domain.merge(letters(b));
  return models(m, a, domain) == models(m, b, domain);
}

std::optional<Formula> find_base_conjunction(const Matrix& m, const Formula& x, const Formula& y, unsigned depth) {
  const FormulaSet pair{x, y};
  const Formula direct = Formula::conj(x, y);
  if (same_models(m, pair, FormulaSet{direct})) return direct;
  LetterSet domain = letters(pair);
  std::optional<Formula> found;
  enumerate_formulas(domain, depth, [&](const Formula& z) {
    if (same_models(m, pair, FormulaSet{z})) found = z;
    return !found;
  });
  return found;
}

bool conjunctive_refutation(const LogicSpec& spec, const Witness& w, unsigned depth) {
  if (spec.para_depth == 0) {
    if (w.gamma.size() != 2) return false;
    return !find_base_conjunction(spec.matrix, w.gamma[0], w.gamma[1], depth).has_value();
  }
  if (w.formulas.empty()) return false;
  const auto result = search_conjunction(spec, w.gamma, w.formulas, depth);
  return !result.survivor.has_value();
}

// ---------------------------------------------------------------------------

std::string describe_failure(const LogicSpec& spec, PropertyId p, const Witness& w) {
  const std::string L = spec.name();
  const auto& xs = w.formulas;
  switch (p) {
    case PropertyId::Inclusion:
      return "in " + L + ", " + w.gamma.braced() + " does not entail its member " + xs[0].text();
    case PropertyId::Monotonicity:
      return "in " + L + ", " + w.gamma.braced() + " entails " + xs[0].text() + " but " +
             w.gamma.united(w.delta).braced() + " does not";
    case PropertyId::Idempotency:
      return "in " + L + ", " + w.delta.braced() + " lies in Cn(" + w.gamma.braced() + ") and yields " +
             xs[0].text() + ", so " + xs[0].text() + " is in Cn(Cn(G)) but not in Cn(G)";
    case PropertyId::Transitivity:
      return "in " + L + ", G = " + w.gamma.braced() + " entails every member of D = " + w.delta.braced() +
             ", D entails " + xs[0].text() + ", G does not";
    case PropertyId::WeakTransitivity:
      return "in " + L + ", {" + xs[0].text() + "} entails " + xs[1].text() + ", {" + xs[1].text() + "} entails " +
             xs[2].text() + ", {" + xs[0].text() + "} does not";
    case PropertyId::ModusPonens:
      return "in " + L + ", Cn(" + w.gamma.braced() + ") contains " + xs[0].text() + " and " +
             Formula::imp(xs[0], xs[1]).text() + " but not " + xs[1].text();
    case PropertyId::FullDt:
    case PropertyId::ModifiedFullDt:
    case PropertyId::WeakDtFwd:
    case PropertyId::ModifiedWeakDtFwd: {
      const bool modified = p == PropertyId::ModifiedFullDt || p == PropertyId::ModifiedWeakDtFwd;
      const Formula cond = modified ? Formula::imp(xs[0], Formula::imp(xs[0], xs[1])) : Formula::imp(xs[0], xs[1]);
      const bool lhs = entails_at(spec, w.gamma.with(xs[0]), xs[1]);
      return "in " + L + ", G = " + w.gamma.braced() + ": G + {" + xs[0].text() + "} " +
             (lhs ? "entails " : "does not entail ") + xs[1].text() + " but G " + (lhs ? "does not entail " : "entails ") +
             cond.text();
    }
    case PropertyId::PIdempotent:
      return "P and P(P) disagree on " + w.gamma.braced() + " => " + xs[0].text();
    default: return w.description;
  }
}

// ---------------------------------------------------------------------------
// Sampling context

class Sampler {
 public:
  Sampler(const LogicSpec& spec, const Budget& budget, PropertyId p)
      : spec_(spec), budget_(budget), letters_(budget.letter_pool()), rng_(seeded_rng(budget, p, spec.para_depth)) {}

  bool ent(const FormulaSet& g, const Formula& a) const { return entails_at(spec_, g, a); }
  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }
  Formula random() { return random_formula(letters_, budget_.depth, rng_); }

  FormulaSet random_set(std::size_t lo, std::size_t hi) {
    const std::size_t n = hi <= lo ? lo : lo + pick(hi - lo + 1);
    std::vector<Formula> items;
    for (std::size_t i = 0; i < n; ++i) items.push_back(random());
    return FormulaSet(std::move(items));
  }

  /// A formula that often follows from `premises` in matrix logics with a
  /// max-like disjunction; callers still check entailment.
  Formula candidate(const FormulaSet& premises) {
    if (premises.empty()) return random();
    const Formula& a = premises[pick(premises.size())];
    const Formula& b = premises[pick(premises.size())];
    switch (pick(6)) {
      case 0: return a;
      case 1: return Formula::disj(a, random());
      case 2: return Formula::disj(random(), a);
      case 3: return Formula::conj(a, b);
      case 4: return Formula::imp(random(), a);
      default: return random();
    }
  }

  /// Up to `n` candidates followed by a letter absent from `premises`.
  std::vector<Formula> probes(const FormulaSet& premises, std::size_t n) {
    std::vector<Formula> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(i % 2 ? random() : candidate(premises));
    LetterSet used = letters(premises);
    used.insert(letters_.begin(), letters_.end());
    out.push_back(fresh_letter(used));
    return out;
  }

  const Budget& budget() const { return budget_; }

 private:
  const LogicSpec& spec_;
  const Budget& budget_;
  LetterSet letters_;
  std::mt19937_64 rng_;
};

struct Instance {
  bool counted = false;
  std::optional<Witness> counterexample;
};

Verdict skeleton(const LogicSpec& spec, PropertyId p, const Budget& budget) {
  Verdict v;
  v.property = p;
  v.logic = spec.name();
  v.para_depth = spec.para_depth;
  v.bounds = Bounds{budget.depth, budget.letters, budget.gamma_size};
  return v;
}

/// Stored candidates first, then seeded samples until `budget.samples`
/// non-vacuous instances have been checked.
Verdict universal(const LogicSpec& spec, PropertyId p, const Budget& budget, const std::vector<Witness>& candidates,
                  const std::function<Instance(Sampler&)>& draw) {
  Verdict v = skeleton(spec, p, budget);
  for (const auto& w : candidates) {
    if (refutes(spec, p, w)) {
      v.outcome = Outcome::Fails;
      v.method = Method::Witness;
      v.witness = w;
      v.witness->description = describe_failure(spec, p, w);
      return v;
    }
  }
  Sampler sampler(spec, budget, p);
  const std::size_t max_attempts = budget.samples * 50;
  for (std::size_t attempt = 0; attempt < max_attempts && v.samples_run < budget.samples; ++attempt) {
    Instance in = draw(sampler);
    if (in.counted) ++v.samples_run;
    if (in.counterexample) {
      v.outcome = Outcome::Fails;
      v.method = Method::Witness;
      v.witness = std::move(in.counterexample);
      v.witness->description = describe_failure(spec, p, *v.witness) + " (found by sampling)";
      return v;
    }
  }
  v.method = Method::Sampled;
  v.outcome = v.samples_run >= budget.samples ? Outcome::Holds : Outcome::Undecided;
  return v;
}

Witness make_witness(FormulaSet gamma, FormulaSet delta, std::vector<Formula> formulas) {
  return Witness{"", std::move(gamma), std::move(delta), std::move(formulas)};
}

// ---------------------------------------------------------------------------
// Individual properties

Verdict check_explosion(const LogicSpec& spec, PropertyId p, const Budget& budget) {
  Verdict v = skeleton(spec, p, budget);
  const bool asking_explosive = p == PropertyId::Explosive;
  for (const auto& w : {make_witness(fs("p, ~p"), {}, {f("p")}), make_witness(fs("p & ~p"), {}, {f("p")})}) {
    if (shows_paraconsistency(spec, w)) {
      v.outcome = asking_explosive ? Outcome::Fails : Outcome::Holds;
      v.method = Method::Witness;
      v.witness = w;
      v.witness->description = "in " + spec.name() + ", " + w.gamma.braced() + " is consistent yet entails both " +
                               w.formulas[0].text() + " and " + Formula::neg(w.formulas[0]).text();
      return v;
    }
  }
  if (star_evidence(spec)) {
    v.outcome = asking_explosive ? Outcome::Holds : Outcome::Fails;
    v.method = Method::Exact;
    std::string detail;
    for (const Value& d : spec.matrix.designated())
      detail += (detail.empty() ? "" : ", ") + std::string("f~(") + d.to_string() + ") = " + spec.matrix.neg(d).to_string();
    v.witness = Witness{"condition (*) holds in " + spec.matrix.name() + " (" + detail +
                            "), so Mod(x) and Mod(~x) are disjoint and any A with x, ~x in Cn(A) has no model",
                        {}, {}, {}};
    return v;
  }
  v.outcome = Outcome::Undecided;
  v.method = Method::Bounded;
  return v;
}

Witness no_inconsistent_sets_witness(const LogicSpec& spec) {
  return Witness{"no set is inconsistent in " + spec.name() +
                     ": a letter absent from G is never entailed, since every consistent subset of G has a model "
                     "that extends with the fresh letter undesignated; replay checks that {p, ~p}, {~(p -> p)} and "
                     "{p & ~p} are consistent here",
                 fs("p, ~p"), {}, {f("~(p -> p)"), f("p & ~p")}};
}

Verdict check_joint_consistency(const LogicSpec& spec, const Budget& budget) {
  Verdict v = skeleton(spec, PropertyId::JointConsistency, budget);
  std::vector<Formula> candidates = enumerate_formulas(LetterSet{"p"}, 2);
  for (const auto& x : candidates) {
    Witness w = make_witness({}, {}, {x});
    if (shows_joint_consistency(spec, w)) {
      v.outcome = Outcome::Holds;
      v.method = Method::Witness;
      w.description = "in " + spec.name() + ", {" + x.text() + "} and {" + Formula::neg(x).text() +
                      "} are consistent but " + FormulaSet{x, Formula::neg(x)}.braced() + " is not";
      v.witness = std::move(w);
      return v;
    }
  }
  if (spec.para_depth > 0) {
    v.outcome = Outcome::Fails;
    v.method = Method::Exact;
    v.witness = no_inconsistent_sets_witness(spec);
    return v;
  }
  v.outcome = Outcome::Undecided;
  v.method = Method::Bounded;
  return v;
}

Verdict check_inconsistent_sets(const LogicSpec& spec, const Budget& budget) {
  Verdict v = skeleton(spec, PropertyId::InconsistentSetsExist, budget);
  for (const auto& g : {fs("p, ~p"), fs("~(p -> p)"), fs("p & ~p")}) {
    if (!consistent_at(spec, g)) {
      v.outcome = Outcome::Holds;
      v.method = Method::Witness;
      v.witness = Witness{g.braced() + " is inconsistent in " + spec.name(), g, {}, {}};
      return v;
    }
  }
  if (spec.para_depth > 0) {
    v.outcome = Outcome::Fails;
    v.method = Method::Exact;
    v.witness = no_inconsistent_sets_witness(spec);
    return v;
  }
  v.outcome = Outcome::Undecided;
  v.method = Method::Bounded;
  return v;
}

Verdict check_conjunctive(const LogicSpec& spec, const Budget& budget) {
  Verdict v = skeleton(spec, PropertyId::ConjunctiveProperty, budget);
  if (spec.para_depth == 0) {
    Sampler s(spec, budget, PropertyId::ConjunctiveProperty);
    for (; v.samples_run < budget.samples; ++v.samples_run) {
      const Formula x = s.random();
      const Formula y = s.random();
      if (find_base_conjunction(spec.matrix, x, y, 2)) continue;
      v.outcome = Outcome::Fails;
      v.method = Method::Bounded;
      v.bounds.max_depth = 2;
      v.witness = Witness{"in " + spec.name() + ", no z up to depth 2 over the letters of " + x.text() + " and " +
                              y.text() + " has the same models as the pair",
                          FormulaSet{x, y}, {}, {}};
      return v;
    }
    v.outcome = Outcome::Holds;
    v.method = Method::Sampled;
    return v;
  }

  // P-logics: x = p, y = ~p. Cn({p, ~p}) contains p | q and ~p | q but not q.
  const FormulaSet pair = fs("p, ~p");
  const std::vector<Formula> probes{f("p | q"), f("~p | q"), f("q")};
  const bool probes_separate = entails_at(spec, pair, probes[0]) && entails_at(spec, pair, probes[1]) &&
                               !entails_at(spec, pair, probes[2]);
  v.method = Method::Bounded;
  if (!probes_separate) {
    v.outcome = Outcome::Undecided;
    return v;
  }
  const auto search = search_conjunction(spec, pair, probes, budget.depth);
  if (search.survivor) {
    v.outcome = Outcome::Undecided;
    v.note = "candidate " + search.survivor->text() + " agrees with {p, ~p} on every probe";
    return v;
  }
  v.outcome = Outcome::Fails;
  v.witness = Witness{"in " + spec.name() + ", {p, ~p} entails p | q and ~p | q but not q; every z over {p, q} up to depth " +
                          std::to_string(budget.depth) + " (" + std::to_string(search.formulas_covered) +
                          " formulas, " + std::to_string(search.classes) + " truth functions) disagrees on these probes",
                      pair, {}, probes};
  return v;
}

Verdict check_p_idempotent(const LogicSpec& spec, const Budget& budget) {
  const LogicSpec once{spec.matrix, 1};
  const LogicSpec twice{spec.matrix, 2};
  Verdict v = skeleton(spec, PropertyId::PIdempotent, budget);
  Sampler s(spec, budget, PropertyId::PIdempotent);
  for (; v.samples_run < budget.samples; ++v.samples_run) {
    const FormulaSet g = s.random_set(0, budget.gamma_size);
    const Formula a = s.pick(2) ? s.candidate(g) : s.random();
    if (logic_entails(once, g, a) != logic_entails(twice, g, a)) {
      v.outcome = Outcome::Fails;
      v.method = Method::Witness;
      Witness w = make_witness(g, {}, {a});
      w.description = describe_failure(spec, PropertyId::PIdempotent, w);
      v.witness = std::move(w);
      return v;
    }
  }
  v.outcome = Outcome::Holds;
  v.method = Method::Sampled;
  v.note = "queries compare P(" + spec.matrix.name() + ") with P(P(" + spec.matrix.name() + "))";
  return v;
}

std::vector<Witness> transitivity_candidates() {
  return {make_witness(fs("p, ~p"), fs("p | q, ~p"), {f("q")})};
}

Verdict check_universal(const LogicSpec& spec, PropertyId p, const Budget& budget) {
  const std::size_t g = budget.gamma_size;
  switch (p) {
    case PropertyId::Inclusion:
      return universal(spec, p, budget,
                       {make_witness(fs("~(p -> p)"), {}, {f("~(p -> p)")}),
                        make_witness(fs("p & ~p"), {}, {f("p & ~p")})},
                       [&](Sampler& s) {
                         FormulaSet gamma = s.random_set(1, g);
                         Formula a = gamma[s.pick(gamma.size())];
                         Instance in{true, std::nullopt};
                         if (!s.ent(gamma, a)) in.counterexample = make_witness(gamma, {}, {a});
                         return in;
                       });
    case PropertyId::Monotonicity:
      return universal(spec, p, budget, {}, [&](Sampler& s) {
        FormulaSet gamma = s.random_set(1, g > 1 ? g - 1 : 1);
        FormulaSet delta = s.random_set(1, std::max<std::size_t>(1, g - gamma.size()));
        Formula a = s.candidate(gamma);
        Instance in;
        if (!s.ent(gamma, a)) return in;
        in.counted = true;
        if (!s.ent(gamma.united(delta), a)) in.counterexample = make_witness(gamma, delta, {a});
        return in;
      });
    case PropertyId::Idempotency:
      return universal(spec, p, budget, transitivity_candidates(), [&](Sampler& s) {
        FormulaSet gamma = s.random_set(1, g);
        std::vector<Formula> consequences;
        const auto probes = s.probes(gamma, 10);
        for (const auto& b : probes)
          if (consequences.size() < 8 && s.ent(gamma, b)) consequences.push_back(b);
        Instance in;
        if (consequences.empty()) return in;
        in.counted = true;
        const FormulaSet closure(std::move(consequences));
        for (const auto& a : probes) {
          if (s.ent(closure, a) && !s.ent(gamma, a)) {
            in.counterexample = make_witness(gamma, closure, {a});
            break;
          }
        }
        return in;
      });
    case PropertyId::Transitivity:
      return universal(spec, p, budget, transitivity_candidates(), [&](Sampler& s) {
        FormulaSet gamma = s.random_set(1, g);
        std::vector<Formula> consequences;
        for (const auto& b : s.probes(gamma, 10))
          if (s.ent(gamma, b)) consequences.push_back(b);
        Instance in;
        if (consequences.empty()) return in;
        std::vector<Formula> chosen;
        const std::size_t k = 1 + s.pick(std::min(consequences.size(), g));
        for (std::size_t i = 0; i < k; ++i) chosen.push_back(consequences[s.pick(consequences.size())]);
        const FormulaSet delta(std::move(chosen));
        for (int tries = 0; tries < 8; ++tries) {
          Formula a = s.candidate(delta);
          if (!s.ent(delta, a)) continue;
          in.counted = true;
          if (!s.ent(gamma, a)) in.counterexample = make_witness(gamma, delta, {a});
          break;
        }
        return in;
      });
    case PropertyId::WeakTransitivity:
      return universal(spec, p, budget, {}, [&](Sampler& s) {
        auto follow = [&](const Formula& from) -> std::optional<Formula> {
          for (int tries = 0; tries < 8; ++tries) {
            Formula b = s.candidate(FormulaSet{from});
            if (s.ent(FormulaSet{from}, b)) return b;
          }
          return std::nullopt;
        };
        Instance in;
        const Formula a = s.random();
        const auto b = follow(a);
        if (!b) return in;
        const auto c = follow(*b);
        if (!c) return in;
        in.counted = true;
        if (!s.ent(FormulaSet{a}, *c)) in.counterexample = make_witness({}, {}, {a, *b, *c});
        return in;
      });
    default: break;
  }
  throw PreconditionError("not a universal property: " + to_string(p));
}

}  // namespace

Verdict check_modus_ponens(const LogicSpec& spec, const Budget& budget) {
  budget.validate();
  const std::size_t g = budget.gamma_size;
  Verdict v = universal(spec, PropertyId::ModusPonens, budget,
                        {make_witness(fs("p, ~p & (p -> q)"), {}, {f("p"), f("q")})}, [&](Sampler& s) {
                          Instance in;
                          FormulaSet gamma = s.random_set(1, g);
                          Formula a = s.candidate(gamma);
                          if (!s.ent(gamma, a)) return in;
                          for (int tries = 0; tries < 8; ++tries) {
                            Formula b = tries % 2 ? s.random() : s.candidate(gamma);
                            if (!s.ent(gamma, Formula::imp(a, b))) continue;
                            in.counted = true;
                            if (!s.ent(gamma, b)) in.counterexample = make_witness(gamma, {}, {a, b});
                            break;
                          }
                          return in;
                        });
  v.note = "modus ponens read as the closure rule: a and a -> b in Cn(G) imply b in Cn(G)";
  return v;
}

Verdict check_deduction_variant(const LogicSpec& spec, PropertyId variant, const Budget& budget) {
  budget.validate();
  const bool full = variant == PropertyId::FullDt || variant == PropertyId::ModifiedFullDt;
  if (!full && variant != PropertyId::WeakDtFwd && variant != PropertyId::ModifiedWeakDtFwd)
    throw PreconditionError("not a deduction theorem variant: " + to_string(variant));
  const std::size_t g = budget.gamma_size;
  const std::vector<Witness> candidates{
      make_witness({}, {}, {f("p"), f("p")}),
      make_witness({}, {}, {f("~(p -> p)"), f("~(p -> p)")}),
      make_witness({}, {}, {f("p & ~p"), f("p & ~p")}),
      make_witness({}, {}, {f("p"), f("~(p -> ~p)")}),
  };
  return universal(spec, variant, budget, candidates, [&](Sampler& s) {
    Instance in;
    FormulaSet gamma = s.random_set(0, g > 1 ? g - 1 : 0);
    Formula a = s.pick(2) ? s.candidate(gamma) : s.random();
    const FormulaSet extended = gamma.with(a);
    Witness w = make_witness(gamma, {}, {a, a});
    if (full) {
      w.formulas[1] = s.pick(2) ? s.candidate(extended) : s.random();
      in.counted = true;
    } else {
      for (int tries = 0; tries < 8 && !in.counted; ++tries) {
        w.formulas[1] = s.candidate(extended);
        in.counted = s.ent(extended, w.formulas[1]);
      }
      if (!in.counted) return in;
    }
    if (refutes(spec, variant, w)) in.counterexample = std::move(w);
    return in;
  });
}

Verdict check_property(const LogicSpec& spec, PropertyId p, const Budget& budget) {
  budget.validate();
  if (spec.para_depth > kMaxParaDepth)
    throw PreconditionError("paraconsistentization depth above " + std::to_string(kMaxParaDepth));
  Verdict v;
  switch (p) {
    case PropertyId::Explosive:
    case PropertyId::Paraconsistent: v = check_explosion(spec, p, budget); break;
    case PropertyId::JointConsistency: v = check_joint_consistency(spec, budget); break;
    case PropertyId::ConjunctiveProperty: v = check_conjunctive(spec, budget); break;
    case PropertyId::InconsistentSetsExist: v = check_inconsistent_sets(spec, budget); break;
    case PropertyId::PIdempotent: v = check_p_idempotent(spec, budget); break;
    case PropertyId::ModusPonens: v = check_modus_ponens(spec, budget); break;
    case PropertyId::FullDt:
    case PropertyId::ModifiedFullDt:
    case PropertyId::WeakDtFwd:
    case PropertyId::ModifiedWeakDtFwd: v = check_deduction_variant(spec, p, budget); break;
    default: v = check_universal(spec, p, budget); break;
  }
  if (!replay(spec, v)) {
    v.note = "evidence did not replay: " + (v.witness ? v.witness->description : std::string("none"));
    v.outcome = Outcome::Undecided;
    v.witness.reset();
  }
  return v;
}

bool replay(const LogicSpec& spec, const Verdict& v) {
  if (v.outcome == Outcome::Undecided) return true;
  const bool evidence_needed = v.outcome == Outcome::Fails || v.method == Method::Witness || v.method == Method::Exact;
  if (!evidence_needed) return true;
  if (!v.witness) return false;
  const Witness& w = *v.witness;
  switch (v.property) {
    case PropertyId::Explosive:
    case PropertyId::Paraconsistent: {
      const bool says_paraconsistent = (v.property == PropertyId::Paraconsistent) == (v.outcome == Outcome::Holds);
      if (v.method == Method::Exact) return !says_paraconsistent && star_evidence(spec);
      return says_paraconsistent && shows_paraconsistency(spec, w);
    }
    case PropertyId::JointConsistency:
      return v.outcome == Outcome::Holds ? shows_joint_consistency(spec, w) : no_inconsistent_sets_evidence(spec, w);
    case PropertyId::InconsistentSetsExist:
      return v.outcome == Outcome::Holds ? !consistent_at(spec, w.gamma) : no_inconsistent_sets_evidence(spec, w);
    case PropertyId::ConjunctiveProperty:
      return v.outcome == Outcome::Fails && conjunctive_refutation(spec, w, v.bounds.max_depth);
    default:
      return v.outcome == Outcome::Fails && refutes(spec, v.property, w);
  }
}

}  // namespace paramat
