#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace paramat {

enum class Connective : std::uint8_t { Neg, Or, And, Imp };

enum class FormulaKind : std::uint8_t { Letter, Neg, Or, And, Imp };

using LetterSet = std::set<std::string>;

/// True if `name` matches [a-z][a-zA-Z0-9_]*.
bool is_letter_name(std::string_view name);

/// Immutable propositional formula over ~, |, &, ->. Subtrees are shared.
///
/// Every node caches its minimal-parentheses rendering; since rendering is
/// injective (parse inverts it), equality and ordering compare that text.
class Formula {
 public:
  static Formula letter(std::string name);
  static Formula neg(Formula child);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula binary(Connective op, Formula lhs, Formula rhs);

  FormulaKind kind() const noexcept;
  bool is_letter() const noexcept { return kind() == FormulaKind::Letter; }

  /// Letter name; empty for compound formulas.
  const std::string& name() const noexcept;
  /// Operand of a negation, or left operand of a binary formula.
  const Formula& lhs() const;
  /// Right operand of a binary formula.
  const Formula& rhs() const;

  /// Connective nesting depth; letters have depth 0.
  unsigned depth() const noexcept;
  const std::string& text() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Finite set of formulas in canonical (rendered-text) order without duplicates.
class FormulaSet {
 public:
  using const_iterator = std::vector<Formula>::const_iterator;

  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> items);
  explicit FormulaSet(std::vector<Formula> items);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const std::vector<Formula>& items() const noexcept { return items_; }

  bool contains(const Formula& f) const;
  bool is_subset_of(const FormulaSet& other) const;
  FormulaSet with(const Formula& f) const;
  FormulaSet without(const Formula& f) const;
  FormulaSet united(const FormulaSet& other) const;

  /// Comma-separated rendering accepted by parse_formula_set; "" for the empty set.
  std::string to_string() const;
  /// "{a, b}" style rendering for reports.
  std::string braced() const;

  friend bool operator==(const FormulaSet&, const FormulaSet&) = default;
  friend std::strong_ordering operator<=>(const FormulaSet& a, const FormulaSet& b);

 private:
  std::vector<Formula> items_;
};

std::ostream& operator<<(std::ostream& os, const FormulaSet& s);

Formula parse_formula(std::string_view text);
/// Comma-separated formulas; blank input denotes the empty set.
FormulaSet parse_formula_set(std::string_view text);

inline std::string render(const Formula& f) { return f.text(); }

LetterSet letters(const Formula& f);
LetterSet letters(const FormulaSet& s);

/// Visits every formula over `letters` with depth <= max_depth exactly once:
/// layer by layer, negations before disjunctions, conjunctions, implications,
/// operand pairs in index order. Returning false from the visitor stops the walk.
void enumerate_formulas(const LetterSet& letters, unsigned max_depth,
                        const std::function<bool(const Formula&)>& visit);
std::vector<Formula> enumerate_formulas(const LetterSet& letters, unsigned max_depth);

Formula random_formula(const LetterSet& letters, unsigned max_depth, std::mt19937_64& rng);
Formula random_formula(const LetterSet& letters, unsigned max_depth, std::uint64_t seed);

}  // namespace paramat
