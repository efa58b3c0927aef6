#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paramat/formula.hpp"
#include "paramat/matrix.hpp"

namespace paramat {

/// Assignment of truth values to a finite set of letters.
using Valuation = std::map<std::string, Value>;

std::string to_string(const Valuation& v);

/// All valuations of `letters` into a matrix, in a fixed order: values
/// ascending, the first letter (lexicographically) most significant.
///
/// Formulas are evaluated column-wise: `column(f)` holds the value index of f
/// under every valuation at once.
class ValuationSpace {
 public:
  ValuationSpace(const Matrix& m, LetterSet letters);

  const Matrix& matrix() const noexcept { return *matrix_; }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return rows_; }

  Valuation valuation(std::size_t row) const;
  std::vector<std::uint8_t> column(const Formula& f) const;
  /// 1 where f takes a designated value.
  std::vector<std::uint8_t> designated_column(const Formula& f) const;

 private:
  const Matrix* matrix_;
  std::vector<std::string> letters_;
  std::size_t rows_ = 1;
};

struct EntailmentResult {
  bool holds = false;
  /// Present iff !holds: a model of the premises that is not a model of the conclusion.
  std::optional<Valuation> countermodel;
};

enum class Classification { Tautology, Contradiction, UnsatisfiableNondegenerate, Contingent };

std::string to_string(Classification c);

Value eval(const Matrix& m, const Valuation& v, const Formula& f);

std::vector<Valuation> valuations(const Matrix& m, const LetterSet& letters);

/// Models of `gamma` among the valuations of `letters` (which must cover gamma).
std::vector<Valuation> models(const Matrix& m, const FormulaSet& gamma, const LetterSet& letters);

/// gamma |= alpha, decided over letters(gamma) and letters(alpha).
EntailmentResult entails(const Matrix& m, const FormulaSet& gamma, const Formula& alpha);

Classification classify(const Matrix& m, const Formula& alpha);

/// Satisfiability of a finite premise set. For finite sets this coincides
/// with Cn(gamma) != For whenever D is a proper subset: a model extends to a
/// fresh letter with an undesignated value, so the fresh letter is not entailed.
bool is_consistent(const Matrix& m, const FormulaSet& gamma);

/// True iff every formula over `letters` up to `max_depth` takes the value 1/2
/// under the valuation sending every letter to 1/2.
bool tautology_free_check(const Matrix& m, const LetterSet& letters, unsigned max_depth);

}  // namespace paramat
