#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paramat/formula.hpp"
#include "paramat/para.hpp"

namespace paramat {

/// Rows of the summary table, in table order.
enum class PropertyId : std::uint8_t {
  Explosive,
  JointConsistency,
  ConjunctiveProperty,
  Paraconsistent,
  InconsistentSetsExist,
  PIdempotent,
  Inclusion,
  Monotonicity,
  Idempotency,
  Transitivity,
  WeakTransitivity,
  ModusPonens,
  FullDt,
  ModifiedFullDt,
  WeakDtFwd,
  ModifiedWeakDtFwd,
};

inline constexpr std::size_t kPropertyCount = 16;

const std::array<PropertyId, kPropertyCount>& all_properties();
/// snake_case identifier, e.g. "joint_consistency".
std::string to_string(PropertyId p);
/// Row label as printed in the summary table.
std::string label(PropertyId p);
std::optional<PropertyId> property_from_string(std::string_view id);

enum class Outcome : std::uint8_t { Holds, Fails, Undecided };
enum class Method : std::uint8_t { Exact, Witness, Sampled, Bounded };

std::string to_string(Outcome o);
std::string to_string(Method m);
std::optional<Outcome> outcome_from_string(std::string_view s);
std::optional<Method> method_from_string(std::string_view s);

/// Search and sampling limits for one audit.
struct Budget {
  std::size_t samples = 500;
  unsigned depth = 3;
  unsigned letters = 3;
  std::size_t gamma_size = 5;
  std::uint64_t seed = 0;

  /// Throws PreconditionError unless every limit is positive and letters <= 8.
  void validate() const;
  /// The first `letters` of p, q, r, s, t, u, v, w.
  LetterSet letter_pool() const;

  friend bool operator==(const Budget&, const Budget&) = default;
};

/// A replayable counterexample or piece of evidence. The roles of the fields
/// depend on the property; `description` spells them out.
struct Witness {
  std::string description;
  FormulaSet gamma;
  FormulaSet delta;
  std::vector<Formula> formulas;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Bounds {
  unsigned max_depth = 0;
  unsigned max_letters = 0;
  std::size_t max_gamma = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct Verdict {
  PropertyId property = PropertyId::Explosive;
  std::string logic;
  unsigned para_depth = 0;
  Outcome outcome = Outcome::Undecided;
  Method method = Method::Sampled;
  std::optional<Witness> witness;
  std::size_t samples_run = 0;
  Bounds bounds;
  std::string note;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Decides one property for one logic. Every FAILS verdict carries a witness
/// that has already been replayed.
Verdict check_property(const LogicSpec& logic, PropertyId property, const Budget& budget);

/// `variant` must be one of FullDt, ModifiedFullDt, WeakDtFwd, ModifiedWeakDtFwd.
Verdict check_deduction_variant(const LogicSpec& logic, PropertyId variant, const Budget& budget);

/// Modus ponens read as a closure rule: a and a -> b in Cn(G) imply b in Cn(G).
Verdict check_modus_ponens(const LogicSpec& logic, const Budget& budget);

/// Re-derives the verdict's witness with plain semantics/para calls. True when
/// the witness still demonstrates the recorded outcome (or none is needed).
bool replay(const LogicSpec& logic, const Verdict& verdict);

struct Discrepancy {
  PropertyId property = PropertyId::Explosive;
  std::string logic;
  bool published_value = false;
  Outcome computed = Outcome::Undecided;
  std::string evidence;
  bool replayed = false;
  bool known = false;

  /// "property/logic", the grid key.
  std::string cell() const { return to_string(property) + "/" + logic; }

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct AuditReport {
  Budget budget;
  std::vector<std::string> columns;
  /// Row-major: verdicts[row * columns.size() + column], rows in table order.
  std::vector<Verdict> verdicts;
  std::vector<Discrepancy> discrepancies;
  /// False for audits of logics the summary table does not cover.
  bool compared_with_table = true;

  const Verdict& at(PropertyId p, std::size_t column) const;
  /// Discrepancies outside the known list, or whose evidence did not replay.
  bool has_unexpected_discrepancies() const;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// L3, P(L3), G3, P(G3), K3, P(K3).
std::vector<LogicSpec> table_columns();
/// The summary table's tick (true) or cross (false).
bool published_value(PropertyId p, std::size_t column);
/// Cells where the computed value is expected to differ from the table.
const std::vector<std::string>& known_discrepancies();

/// Computes the full 16 x 6 grid and compares it with the summary table.
AuditReport run_table(const Budget& budget);

/// Audits an arbitrary base matrix and its paraconsistentization (two columns).
AuditReport audit_logic(const Matrix& base, const Budget& budget);

struct WitnessCheck {
  std::string name;
  bool passed = false;
};

struct WitnessSuiteReport {
  std::string logic;
  std::vector<WitnessCheck> checks;

  bool all_passed() const;
};

/// Replays the stored concrete counterexamples for the base logic of `logic`
/// (L3, G3 or K3, matched by table identity) and for its P-transform.
WitnessSuiteReport verify_witness_suite(const LogicSpec& logic);

}  // namespace paramat
