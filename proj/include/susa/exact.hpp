#pragma once

#include <map>
#include <string>
#include <vector>

#include "susa/profile.hpp"
#include "susa/rational.hpp"

namespace susa {

/// Exact value q0 + sum(c_d * sqrt(d)) over squarefree radicands d >= 2.
class SurdValue {
 public:
  struct RadicandLess {
    bool operator()(const BigInt& a, const BigInt& b) const { return cmp(a, b) < 0; }
  };
  using Terms = std::map<BigInt, Rational, RadicandLess>;

  SurdValue() = default;
  SurdValue(const Rational& r) : rational_(r) {}  // NOLINT(google-explicit-constructor)
  SurdValue(long r) : rational_(r) {}             // NOLINT(google-explicit-constructor)

  /// c * sqrt(radicand) for any positive integer radicand; square factors
  /// are pulled out so the stored radicand is squarefree.
  static SurdValue root(const BigInt& radicand, const Rational& coefficient = Rational(1));

  const Rational& rational_part() const { return rational_; }
  const Terms& terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && rational_.is_zero(); }
  /// Coefficient of sqrt(d), zero if absent.
  Rational coefficient(const BigInt& radicand) const;

  /// Sign of the real value, decided by exact comparison when possible and
  /// by adaptive high-precision evaluation otherwise.
  int sign() const;

  /// "q0 + q1*sqrt(d1) - ..." with terms by ascending radicand.
  std::string str() const;

  SurdValue& operator+=(const SurdValue& o);
  SurdValue& operator-=(const SurdValue& o);
  SurdValue& operator*=(const SurdValue& o);

  friend SurdValue operator+(SurdValue a, const SurdValue& b) { return a += b; }
  friend SurdValue operator-(SurdValue a, const SurdValue& b) { return a -= b; }
  friend SurdValue operator*(SurdValue a, const SurdValue& b) { return a *= b; }
  friend SurdValue operator-(const SurdValue& a) { return SurdValue(0) - a; }
  /// Division by a nonzero rational only.
  friend SurdValue operator/(SurdValue a, const Rational& b);

  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.rational_ == b.rational_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const BigInt& radicand, const Rational& coefficient);

  Rational rational_;
  Terms terms_;
};

/// Exact sqrt of a nonnegative rational as k*sqrt(d), d squarefree.
SurdValue surd_sqrt(const Rational& r);

/// Squarefree part and square root of the square part: n = k^2 * f.
struct SquarefreeSplit {
  BigInt square_root;
  BigInt squarefree;
};
SquarefreeSplit squarefree_split(const BigInt& n);

/// constant + pi_coefficient * pi. Products of two pi-bearing values are
/// rejected, keeping every value linear in pi.
class AreaExpr {
 public:
  AreaExpr() = default;
  AreaExpr(SurdValue constant, SurdValue pi_coefficient = {})  // NOLINT(google-explicit-constructor)
      : constant_(std::move(constant)), pi_(std::move(pi_coefficient)) {}
  AreaExpr(long value) : constant_(value) {}  // NOLINT(google-explicit-constructor)

  static AreaExpr pi() { return AreaExpr(SurdValue(0), SurdValue(1)); }

  const SurdValue& constant() const { return constant_; }
  const SurdValue& pi_coefficient() const { return pi_; }
  bool has_pi() const { return !pi_.is_zero(); }

  std::string str() const;

  friend AreaExpr operator+(const AreaExpr& a, const AreaExpr& b) {
    return {a.constant_ + b.constant_, a.pi_ + b.pi_};
  }
  friend AreaExpr operator-(const AreaExpr& a, const AreaExpr& b) {
    return {a.constant_ - b.constant_, a.pi_ - b.pi_};
  }
  friend AreaExpr operator*(const AreaExpr& a, const AreaExpr& b);
  friend AreaExpr operator/(const AreaExpr& a, const Rational& b) {
    return {a.constant_ / b, a.pi_ / b};
  }
  friend bool operator==(const AreaExpr&, const AreaExpr&) = default;

 private:
  SurdValue constant_;
  SurdValue pi_;
};

/// Substitutes the profile's pi and root values; MissingConstant names the
/// first radicand (or pi) the profile does not cover.
Rational area_eval(const AreaExpr& e, const ApproximationProfile& profile);
Rational surd_eval(const SurdValue& e, const ApproximationProfile& profile);

/// Decimal expansion truncated toward zero at `decimal_places`, evaluated
/// with guard digits and widened precision until the digits are settled.
std::string numeric_eval(const AreaExpr& e, int decimal_places);
std::string numeric_eval(const SurdValue& e, int decimal_places);
std::string numeric_eval(const Rational& r, int decimal_places);

}  // namespace susa
