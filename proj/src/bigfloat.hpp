#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "susa/rational.hpp"

namespace susa::detail {

/// RAII handle for an MPFR value at a fixed binary precision.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from(const Rational& r, mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_set_q(out.v_, r.raw().get_mpq_t(), MPFR_RNDN);
    return out;
  }
  static BigFloat sqrt_of(const BigInt& n, mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_set_z(out.v_, n.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(out.v_, out.v_, MPFR_RNDN);
    return out;
  }
  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat out(bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

 private:
  mpfr_t v_;
};

/// Binary precision carrying `decimal_places` plus ten guard digits.
inline mpfr_prec_t bits_for_decimal_places(int decimal_places) {
  return static_cast<mpfr_prec_t>((decimal_places + 10) * 3.33) + 16;
}

/// Truncated decimal text of `value`, or empty when the interval
/// [value - error, value + error] does not pin down `places` digits.
std::string settled_decimal(const BigFloat& value, const BigFloat& error, int places);

/// Truncated decimal text of an exact rational.
std::string rational_decimal(const Rational& r, int places);

}  // namespace susa::detail

namespace susa {
class SurdValue;
}

namespace susa::detail {

/// High-precision value of an exact surd (defined alongside SurdValue).
BigFloat evaluate_surd(const SurdValue& value, mpfr_prec_t bits);

}  // namespace susa::detail
