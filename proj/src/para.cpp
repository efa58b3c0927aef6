#include "paramat/para.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "paramat/error.hpp"
#include "paramat/semantics.hpp"

namespace paramat {

std::string LogicSpec::name() const {
  std::string out = matrix.name();
  for (unsigned i = 0; i < para_depth; ++i) out = "P(" + out + ")";
  return out;
}

namespace {

using Mask = std::uint32_t;

void check_bound(const FormulaSet& gamma, std::size_t bound) {
  if (gamma.size() > bound || gamma.size() > 24)
    throw BoundError("premise set has " + std::to_string(gamma.size()) + " formulas; subset bound is " +
                     std::to_string(std::min<std::size_t>(bound, 24)));
}

/// Visits subsets of {0..n-1} by increasing size, each size in lexicographic
/// order of index sequences (which is canonical order for a sorted set).
/// Stops when `visit` returns true.
bool for_each_subset_by_size(std::size_t n, const std::function<bool(Mask)>& visit) {
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask mask = 0;
      for (auto i : idx) mask |= Mask{1} << i;
      if (visit(mask)) return true;
      // Next combination.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

/// For each valuation, which premises it designates (and whether it
/// designates the conclusion, when one is given).
class PremiseTable {
 public:
  PremiseTable(const Matrix& m, const FormulaSet& gamma, const Formula* alpha) : gamma_(gamma) {
    LetterSet domain = letters(gamma);
    if (alpha) domain.merge(letters(*alpha));
    ValuationSpace space(m, std::move(domain));
    rows_.assign(space.size(), 0);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const auto col = space.designated_column(gamma[i]);
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (col[r]) rows_[r] |= Mask{1} << i;
    }
    if (alpha) conclusion_ = space.designated_column(*alpha);
    distinct_ = rows_;
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
  }

  bool consistent(Mask s) const {
    return std::any_of(distinct_.begin(), distinct_.end(), [s](Mask row) { return (row & s) == s; });
  }

  bool entails(Mask s) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if ((rows_[r] & s) == s && !conclusion_[r]) return false;
    return true;
  }

  /// Consistent subsets are exactly the subsets of some row mask, so the
  /// maximal ones are the maximal row masks.
  std::vector<Mask> maximal() const {
    std::vector<Mask> out;
    for (Mask a : distinct_) {
      const bool dominated = std::any_of(distinct_.begin(), distinct_.end(),
                                         [a](Mask b) { return b != a && (a & b) == a; });
      if (!dominated) out.push_back(a);
    }
    return out;
  }

  FormulaSet subset(Mask s) const {
    std::vector<Formula> items;
    for (std::size_t i = 0; i < gamma_.size(); ++i)
      if (s & (Mask{1} << i)) items.push_back(gamma_[i]);
    return FormulaSet(std::move(items));
  }

 private:
  const FormulaSet& gamma_;
  std::vector<Mask> rows_;
  std::vector<Mask> distinct_;
  std::vector<std::uint8_t> conclusion_;
};

}  // namespace

std::vector<FormulaSet> consistent_subsets(const Matrix& m, const FormulaSet& gamma, std::size_t bound) {
  check_bound(gamma, bound);
  PremiseTable table(m, gamma, nullptr);
  std::vector<FormulaSet> out;
  for_each_subset_by_size(gamma.size(), [&](Mask s) {
    if (table.consistent(s)) out.push_back(table.subset(s));
    return false;
  });
  return out;
}

std::vector<FormulaSet> maximal_consistent_subsets(const Matrix& m, const FormulaSet& gamma, std::size_t bound) {
  check_bound(gamma, bound);
  PremiseTable table(m, gamma, nullptr);
  std::vector<FormulaSet> out;
  for (Mask s : table.maximal()) out.push_back(table.subset(s));
  std::sort(out.begin(), out.end());
  return out;
}

ParaResult para_entails(const Matrix& m, const FormulaSet& gamma, const Formula& alpha, std::size_t bound) {
  check_bound(gamma, bound);
  PremiseTable table(m, gamma, &alpha);
  const auto mss = table.maximal();
  const bool holds = std::any_of(mss.begin(), mss.end(), [&](Mask s) { return table.entails(s); });
  if (!holds) return {false, std::nullopt};

  std::optional<FormulaSet> witness;
  for_each_subset_by_size(gamma.size(), [&](Mask s) {
    if (table.consistent(s) && table.entails(s)) {
      witness = table.subset(s);
      return true;
    }
    return false;
  });
  return {true, std::move(witness)};
}

bool logic_entails(const LogicSpec& spec, const FormulaSet& gamma, const Formula& alpha, std::size_t bound) {
  if (spec.para_depth > kMaxParaDepth)
    throw PreconditionError("para depth " + std::to_string(spec.para_depth) + " exceeds the cap of " +
                            std::to_string(kMaxParaDepth));
  switch (spec.para_depth) {
    case 0: return entails(spec.matrix, gamma, alpha).holds;
    case 1: return para_entails(spec.matrix, gamma, alpha, bound).holds;
    default: break;
  }
  check_bound(gamma, bound);
  const LogicSpec lower{spec.matrix, spec.para_depth - 1};
  return for_each_subset_by_size(gamma.size(), [&](Mask s) {
    std::vector<Formula> items;
    for (std::size_t i = 0; i < gamma.size(); ++i)
      if (s & (Mask{1} << i)) items.push_back(gamma[i]);
    const FormulaSet sub(std::move(items));
    return logic_consistent(lower, sub, bound) && logic_entails(lower, sub, alpha, bound);
  });
}

bool logic_consistent(const LogicSpec& spec, const FormulaSet& gamma, std::size_t bound) {
  return !logic_entails(spec, gamma, fresh_letter(letters(gamma)), bound);
}

bool is_para_consistent(const Matrix& m, const FormulaSet& gamma, std::size_t bound) {
  return logic_consistent(LogicSpec{m, 1}, gamma, bound);
}

Formula fresh_letter(const LetterSet& used) {
  std::string name = "z";
  for (unsigned i = 1; used.count(name); ++i) name = "z" + std::to_string(i);
  return Formula::letter(name);
}

}  // namespace paramat
