#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace paramat {

/// Exact rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// "p/q" in lowest terms, or a bare integer when q = 1.
  std::string to_string() const;

  /// Accepts only the canonical spelling produced by to_string().
  static std::optional<Rational> parse(std::string_view token);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Truth values are exact rationals.
using Value = Rational;

}  // namespace paramat

template <>
struct std::hash<paramat::Rational> {
  std::size_t operator()(const paramat::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.numerator()) * 31u ^
           std::hash<std::int64_t>{}(r.denominator());
  }
};
