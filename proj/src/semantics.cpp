#include "paramat/semantics.hpp"

#include <algorithm>

#include "paramat/error.hpp"

namespace paramat {

std::string to_string(const Valuation& v) {
  std::string out;
  for (const auto& [name, value] : v) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value.to_string();
  }
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Tautology: return "tautology";
    case Classification::Contradiction: return "contradiction";
    case Classification::UnsatisfiableNondegenerate: return "unsatisfiable_nondegenerate";
    case Classification::Contingent: return "contingent";
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kMaxRows = std::size_t{1} << 26;
}

ValuationSpace::ValuationSpace(const Matrix& m, LetterSet letter_set)
    : matrix_(&m), letters_(letter_set.begin(), letter_set.end()) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (rows_ > kMaxRows / m.size())
      throw PreconditionError("valuation space too large: " + std::to_string(m.size()) + "^" +
                              std::to_string(letters_.size()) + " rows");
    rows_ *= m.size();
  }
}

Valuation ValuationSpace::valuation(std::size_t row) const {
  Valuation v;
  const std::size_t n = matrix_->size();
  for (std::size_t i = letters_.size(); i-- > 0;) {
    v[letters_[i]] = matrix_->value_at(static_cast<std::uint8_t>(row % n));
    row /= n;
  }
  return v;
}

std::vector<std::uint8_t> ValuationSpace::column(const Formula& f) const {
  const Matrix& m = *matrix_;
  switch (f.kind()) {
    case FormulaKind::Letter: {
      auto it = std::lower_bound(letters_.begin(), letters_.end(), f.name());
      if (it == letters_.end() || *it != f.name()) throw EvalError("letter '" + f.name() + "' is not assigned");
      // Block length of the letter's digit: n^(number of later letters).
      std::size_t stride = 1;
      for (auto later = it + 1; later != letters_.end(); ++later) stride *= m.size();
      std::vector<std::uint8_t> out(rows_);
      for (std::size_t r = 0; r < rows_; ++r) out[r] = static_cast<std::uint8_t>((r / stride) % m.size());
      return out;
    }
    case FormulaKind::Neg: {
      auto out = column(f.lhs());
      for (auto& x : out) x = m.neg_at(x);
      return out;
    }
    default: {
      const Connective op = f.kind() == FormulaKind::Or    ? Connective::Or
                            : f.kind() == FormulaKind::And ? Connective::And
                                                           : Connective::Imp;
      auto out = column(f.lhs());
      const auto rhs = column(f.rhs());
      for (std::size_t r = 0; r < rows_; ++r) out[r] = m.apply_at(op, out[r], rhs[r]);
      return out;
    }
  }
}

std::vector<std::uint8_t> ValuationSpace::designated_column(const Formula& f) const {
  auto out = column(f);
  for (auto& x : out) x = matrix_->designated_at(x) ? 1 : 0;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint8_t eval_index(const Matrix& m, const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Letter: {
      auto it = v.find(f.name());
      if (it == v.end()) throw EvalError("letter '" + f.name() + "' is not assigned");
      if (!m.contains(it->second))
        throw EvalError(it->second.to_string() + " is not a truth value of '" + m.name() + "'");
      return m.index_of(it->second);
    }
    case FormulaKind::Neg: return m.neg_at(eval_index(m, v, f.lhs()));
    case FormulaKind::Or: return m.apply_at(Connective::Or, eval_index(m, v, f.lhs()), eval_index(m, v, f.rhs()));
    case FormulaKind::And: return m.apply_at(Connective::And, eval_index(m, v, f.lhs()), eval_index(m, v, f.rhs()));
    case FormulaKind::Imp: return m.apply_at(Connective::Imp, eval_index(m, v, f.lhs()), eval_index(m, v, f.rhs()));
  }
  return 0;
}

/// Rows of `space` at which every member of `gamma` is designated.
std::vector<std::uint8_t> model_rows(const ValuationSpace& space, const FormulaSet& gamma) {
  std::vector<std::uint8_t> ok(space.size(), 1);
  for (const auto& g : gamma) {
    const auto col = space.designated_column(g);
    for (std::size_t r = 0; r < ok.size(); ++r) ok[r] &= col[r];
  }
  return ok;
}

}  // namespace

Value eval(const Matrix& m, const Valuation& v, const Formula& f) { return m.value_at(eval_index(m, v, f)); }

std::vector<Valuation> valuations(const Matrix& m, const LetterSet& letter_set) {
  ValuationSpace space(m, letter_set);
  std::vector<Valuation> out;
  out.reserve(space.size());
  for (std::size_t r = 0; r < space.size(); ++r) out.push_back(space.valuation(r));
  return out;
}

std::vector<Valuation> models(const Matrix& m, const FormulaSet& gamma, const LetterSet& letter_set) {
  const LetterSet needed = letters(gamma);
  if (!std::includes(letter_set.begin(), letter_set.end(), needed.begin(), needed.end()))
    throw PreconditionError("letter domain does not cover the premises");
  ValuationSpace space(m, letter_set);
  const auto ok = model_rows(space, gamma);
  std::vector<Valuation> out;
  for (std::size_t r = 0; r < ok.size(); ++r)
    if (ok[r]) out.push_back(space.valuation(r));
  return out;
}

EntailmentResult entails(const Matrix& m, const FormulaSet& gamma, const Formula& alpha) {
  LetterSet domain = letters(gamma);
  domain.merge(letters(alpha));
  ValuationSpace space(m, std::move(domain));
  const auto ok = model_rows(space, gamma);
  const auto concl = space.designated_column(alpha);
  for (std::size_t r = 0; r < ok.size(); ++r)
    if (ok[r] && !concl[r]) return {false, space.valuation(r)};
  return {true, std::nullopt};
}

Classification classify(const Matrix& m, const Formula& alpha) {
  ValuationSpace space(m, letters(alpha));
  const auto col = space.column(alpha);
  // The contradiction class needs an undesignated 0.
  const bool zero_usable = m.contains(Value(0)) && !m.is_designated(Value(0));
  const std::uint8_t zero = zero_usable ? m.index_of(Value(0)) : 0;
  bool all_designated = true, none_designated = true, all_zero = zero_usable;
  for (auto x : col) {
    const bool d = m.designated_at(x);
    all_designated &= d;
    none_designated &= !d;
    if (zero_usable) all_zero &= x == zero;
  }
  if (all_designated) return Classification::Tautology;
  if (all_zero) return Classification::Contradiction;
  if (none_designated) return Classification::UnsatisfiableNondegenerate;
  return Classification::Contingent;
}

bool is_consistent(const Matrix& m, const FormulaSet& gamma) {
  ValuationSpace space(m, letters(gamma));
  const auto ok = model_rows(space, gamma);
  return std::find(ok.begin(), ok.end(), 1) != ok.end();
}

bool tautology_free_check(const Matrix& m, const LetterSet& letter_set, unsigned max_depth) {
  const Value half(1, 2);
  if (!m.contains(half)) throw PreconditionError("tautology_free_check needs 1/2 among the values of '" + m.name() + "'");
  Valuation all_half;
  for (const auto& name : letter_set) all_half[name] = half;
  const std::uint8_t h = m.index_of(half);
  bool ok = true;
  enumerate_formulas(letter_set, max_depth, [&](const Formula& f) {
    ok = eval_index(m, all_half, f) == h;
    return ok;
  });
  return ok;
}

}  // namespace paramat
