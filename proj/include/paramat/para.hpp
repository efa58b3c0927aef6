#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paramat/formula.hpp"
#include "paramat/matrix.hpp"

namespace paramat {

inline constexpr std::size_t kDefaultSubsetBound = 16;
inline constexpr unsigned kMaxParaDepth = 2;

struct ParaResult {
  bool holds = false;
  /// Present iff holds: a consistent subset of the premises that entails the
  /// conclusion, smallest first, ties broken by canonical order.
  std::optional<FormulaSet> witness;
};

/// A matrix logic with the paraconsistentization applied `para_depth` times.
struct LogicSpec {
  Matrix matrix;
  unsigned para_depth = 0;

  /// "L3", "P(L3)", "P(P(L3))", ...
  std::string name() const;
};

/// Consistent subsets of gamma (always including the empty set), ordered by
/// size and then canonically. Throws BoundError if |gamma| > bound.
std::vector<FormulaSet> consistent_subsets(const Matrix& m, const FormulaSet& gamma,
                                           std::size_t bound = kDefaultSubsetBound);

/// The inclusion-maximal consistent subsets of gamma, canonically ordered.
std::vector<FormulaSet> maximal_consistent_subsets(const Matrix& m, const FormulaSet& gamma,
                                                   std::size_t bound = kDefaultSubsetBound);

/// gamma |=P alpha: some consistent subset of gamma entails alpha. Decided on
/// the maximal consistent subsets, which suffices because the base
/// consequence is monotone.
ParaResult para_entails(const Matrix& m, const FormulaSet& gamma, const Formula& alpha,
                        std::size_t bound = kDefaultSubsetBound);

/// Consequence at the spec's level: level 0 is |=, level k holds iff some
/// subset of gamma that is consistent at level k-1 entails alpha at level k-1.
bool logic_entails(const LogicSpec& spec, const FormulaSet& gamma, const Formula& alpha,
                   std::size_t bound = kDefaultSubsetBound);

/// Cn(gamma) != For at the spec's level, decided by asking whether gamma
/// entails a letter that does not occur in it.
bool logic_consistent(const LogicSpec& spec, const FormulaSet& gamma, std::size_t bound = kDefaultSubsetBound);

/// Consistency in P(m). Holds for every finite gamma when D is proper.
bool is_para_consistent(const Matrix& m, const FormulaSet& gamma, std::size_t bound = kDefaultSubsetBound);

/// A letter outside `used`: z, z1, z2, ...
Formula fresh_letter(const LetterSet& used);

}  // namespace paramat
