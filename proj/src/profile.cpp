#include "susa/profile.hpp"

#include "susa/error.hpp"

namespace susa {

ApproximationProfile ApproximationProfile::with_root(unsigned long radicand, const Rational& value) const {
  ApproximationProfile out = *this;
  out.roots[radicand] = value;
  return out;
}

const Rational& ApproximationProfile::root(unsigned long radicand) const {
  auto it = roots.find(radicand);
  if (it == roots.end())
    throw Error(ErrorKind::MissingConstant,
                "profile '" + name + "' has no substitute for sqrt(" + std::to_string(radicand) + ")");
  return it->second;
}

const Rational& ApproximationProfile::pi_value() const {
  if (!pi) throw Error(ErrorKind::MissingConstant, "profile '" + name + "' has no substitute for pi");
  return *pi;
}

}  // namespace susa
