#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paramat/formula.hpp"
#include "paramat/rational.hpp"

namespace paramat {

/// A logical matrix <Val, D, f~, f|, f&, f->> over exact rational truth values.
///
/// Values are stored in ascending order and tables are indexed by value
/// position; the index-level accessors are the hot path for evaluation.
class Matrix {
 public:
  using UnaryFn = std::function<Value(Value)>;
  using BinaryFn = std::function<Value(Value, Value)>;

  /// Tabulates the four connectives over `values`. Throws MatrixError if an
  /// output leaves `values` or the designated set is empty or improper.
  Matrix(std::string name, std::vector<Value> values, std::vector<Value> designated,
         const UnaryFn& neg, const BinaryFn& disj, const BinaryFn& conj, const BinaryFn& imp);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Value> values() const noexcept { return values_; }
  std::vector<Value> designated() const;

  bool contains(Value v) const;
  bool is_designated(Value v) const;
  Value neg(Value v) const;
  Value apply(Connective op, Value a, Value b) const;

  /// Position of `v` among values(); throws PreconditionError if absent.
  std::uint8_t index_of(Value v) const;
  const Value& value_at(std::uint8_t i) const { return values_[i]; }
  bool designated_at(std::uint8_t i) const { return designated_[i] != 0; }
  std::uint8_t neg_at(std::uint8_t i) const { return neg_[i]; }
  std::uint8_t apply_at(Connective op, std::uint8_t a, std::uint8_t b) const {
    return binary_table(op)[a * values_.size() + b];
  }

  /// Table identity: same values, designated set and tables. Names are ignored.
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  const std::vector<std::uint8_t>& binary_table(Connective op) const;

  std::string name_;
  std::vector<Value> values_;
  std::vector<std::uint8_t> designated_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> or_;
  std::vector<std::uint8_t> and_;
  std::vector<std::uint8_t> imp_;
};

/// Built-in matrices: "l3", "g3", "k3", "cl2". Throws MatrixError otherwise.
Matrix builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// n-valued Lukasiewicz matrix on {0, 1/(n-1), ..., 1} with D = {1}.
Matrix lukasiewicz(unsigned n);
/// n-valued Goedel matrix on {0, 1/(n-1), ..., 1} with D = {1}.
Matrix goedel(unsigned n);

/// Parses and validates a matrix JSON document.
Matrix load_matrix(std::string_view document);
Matrix load_matrix_file(const std::string& path);
/// Serialises in the same schema load_matrix accepts.
std::string dump_matrix(const Matrix& m);

/// Condition (*): every designated value is negated to a non-designated one.
bool has_star_property(const Matrix& m);

}  // namespace paramat
