#include "bigfloat.hpp"

namespace susa::detail {

namespace {

std::string format_scaled(BigInt scaled, int places) {
  const bool negative = scaled < 0;
  std::string digits = BigInt(abs(scaled)).get_str();
  if (digits.size() <= static_cast<std::size_t>(places))
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return negative ? "-" + digits : digits;
}

BigInt ten_to(int places) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return out;
}

}  // namespace

std::string settled_decimal(const BigFloat& value, const BigFloat& error, int places) {
  const mpfr_prec_t bits = value.precision();
  BigFloat scale(bits);
  mpfr_set_z(scale.get(), ten_to(places).get_mpz_t(), MPFR_RNDN);
  BigFloat lo(bits), hi(bits);
  mpfr_sub(lo.get(), value.get(), error.get(), MPFR_RNDD);
  mpfr_add(hi.get(), value.get(), error.get(), MPFR_RNDU);
  mpfr_mul(lo.get(), lo.get(), scale.get(), MPFR_RNDD);
  mpfr_mul(hi.get(), hi.get(), scale.get(), MPFR_RNDU);
  BigInt lo_units, hi_units;
  mpfr_get_z(lo_units.get_mpz_t(), lo.get(), MPFR_RNDZ);
  mpfr_get_z(hi_units.get_mpz_t(), hi.get(), MPFR_RNDZ);
  if (lo_units != hi_units) return {};
  return format_scaled(lo_units, places);
}

std::string rational_decimal(const Rational& r, int places) {
  return format_scaled((r * Rational(ten_to(places))).trunc(), places);
}

}  // namespace susa::detail
