#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "susa/rational.hpp"

namespace susa {

using Digit = std::uint8_t;
using DigitString = std::vector<Digit>;

/// Signed base-60 numeral with an explicit radix point ("1;24,51,10").
///
/// Always held in canonical form: no leading zero integer digit (zero is the
/// single digit 0), no trailing zero fractional digit, and zero is never
/// negative.
class Sexagesimal {
 public:
  /// Zero.
  Sexagesimal();
  Sexagesimal(bool negative, DigitString integer_digits, DigitString fractional_digits);

  static Sexagesimal from_integer(long value);

  bool negative() const { return negative_; }
  const DigitString& integer_digits() const { return integer_; }
  const DigitString& fractional_digits() const { return fractional_; }
  bool is_zero() const { return integer_.size() == 1 && integer_[0] == 0 && fractional_.empty(); }
  std::size_t places() const { return fractional_.size(); }

  Rational to_rational() const;

  /// Wire format; zero is "0;0" and integers keep the radix point ("4,48;0").
  std::string str() const;

  friend bool operator==(const Sexagesimal&, const Sexagesimal&) = default;

 private:
  bool negative_ = false;
  DigitString integer_;
  DigitString fractional_;
};

/// Radix-free tablet notation. The value is fixed only up to a power of 60.
class FloatingSexagesimal {
 public:
  /// Leading zero digits are dropped; an all-zero sequence is rejected.
  explicit FloatingSexagesimal(DigitString digits);

  const DigitString& digits() const { return digits_; }
  BigInt digits_as_integer() const;
  std::string str() const;

  friend bool operator==(const FloatingSexagesimal&, const FloatingSexagesimal&) = default;

 private:
  DigitString digits_;
};

using Numeral = std::variant<Sexagesimal, FloatingSexagesimal>;

/// Parses `-? d(,d)* (;d(,d)*)?`. A ';' makes the numeral absolute; without
/// it the result is floating, except that a bare "0" is the absolute zero.
Numeral parse(std::string_view text);
/// Like parse, but requires an absolute numeral.
Sexagesimal parse_absolute(std::string_view text);

/// Places the last digit of `f` at 60^exponent.
Sexagesimal place_value(const FloatingSexagesimal& f, long exponent);

enum class Rounding { exact, truncate, round };

/// A sexagesimal value paired with whether it equals its source exactly.
struct Approximation {
  Sexagesimal value;
  bool exact = true;
};

/// Converts to at most max_places fractional digits. In exact mode throws
/// NotFinite unless r has a finite expansion within the budget.
Approximation from_rational(const Rational& r, std::size_t max_places,
                            Rounding mode = Rounding::truncate);

/// Shorthand for from_rational(..., exact) on values known to be finite.
Sexagesimal to_sexagesimal(const Rational& r, std::size_t max_places = 64);

/// Truncation toward zero, keeping at most `places` fractional digits.
Approximation truncate(const Sexagesimal& x, std::size_t places);

/// Fractional places needed for an exact expansion of r; empty when the
/// reduced denominator has a prime factor other than 2, 3 or 5.
std::optional<std::size_t> finite_places(const Rational& r);

Sexagesimal operator+(const Sexagesimal& a, const Sexagesimal& b);
Sexagesimal operator-(const Sexagesimal& a, const Sexagesimal& b);
Sexagesimal operator*(const Sexagesimal& a, const Sexagesimal& b);
Sexagesimal operator-(const Sexagesimal& a);

/// Exact reciprocal; NonRegular when 1/x has no finite expansion.
Sexagesimal reciprocal(const Sexagesimal& x);

/// True iff numerator and denominator of |r| have no prime factor besides 2, 3, 5.
bool is_regular(const Rational& r);

/// Integer and the first `places` fractional digits of |r|, truncated.
std::pair<DigitString, DigitString> expand_digits(const Rational& r, std::size_t places);

}  // namespace susa
