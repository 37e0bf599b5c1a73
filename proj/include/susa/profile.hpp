#pragma once

#include <map>
#include <optional>
#include <string>

#include "susa/rational.hpp"

namespace susa {

/// A named substitution table that defines "evaluate the way a scribe would":
/// a value for pi, values for square roots by radicand, and an optional
/// wholesale replacement for the equilateral-triangle factor sqrt(3)/4.
///
/// Substitutes are exact rationals. Most are finite sexagesimals, but an
/// iteration result such as 6049/1320 is a legitimate substitute too.
struct ApproximationProfile {
  std::string name;
  std::optional<Rational> pi;
  std::map<unsigned long, Rational> roots;
  std::optional<Rational> triangle_coefficient;

  /// Copy with one more (or a replaced) root substitute.
  ApproximationProfile with_root(unsigned long radicand, const Rational& value) const;
  const Rational& root(unsigned long radicand) const;
  const Rational& pi_value() const;
};

}  // namespace susa
