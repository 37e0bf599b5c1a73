#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace susa {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
/// Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p", "-p" or "p/q" in decimal.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;

  /// Floor toward negative infinity.
  BigInt floor() const;
  /// Truncation toward zero.
  BigInt trunc() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

/// 60^exponent for any integer exponent.
Rational pow60(long exponent);
Rational pow_rational(const Rational& base, unsigned long exponent);

/// True iff the nonnegative integer is a perfect square; stores the root.
bool exact_integer_sqrt(const BigInt& value, BigInt& root);
/// True iff r >= 0 is the square of a rational; stores the root.
bool exact_rational_sqrt(const Rational& r, Rational& root);

/// Exact rational value of a plain decimal literal such as "-0.045684".
Rational parse_decimal(std::string_view text);

}  // namespace susa
