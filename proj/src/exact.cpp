#include "susa/exact.hpp"

#include "bigfloat.hpp"
#include "susa/error.hpp"

namespace susa {

namespace {

constexpr unsigned long kTrialBound = 1'000'000;

std::string term_text(const Rational& magnitude, const std::string& symbol) {
  if (magnitude == Rational(1)) return symbol;
  return magnitude.str() + "*" + symbol;
}

void append_signed(std::string& out, const Rational& coefficient, const std::string& symbol) {
  const bool negative = coefficient.sign() < 0;
  std::string body = symbol.empty() ? coefficient.abs().str() : term_text(coefficient.abs(), symbol);
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

}  // namespace

SquarefreeSplit squarefree_split(const BigInt& n) {
  if (n <= 0) throw Error(ErrorKind::ContractViolation, "squarefree_split needs a positive integer");
  BigInt m = n;
  BigInt root = 1;
  BigInt free = 1;
  unsigned long p = 2;
  for (; p <= kTrialBound && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++exponent;
    }
    for (unsigned i = 0; i < exponent / 2; ++i) root *= p;
    if (exponent % 2) free *= p;
  }
  if (m == 1) return {root, free};
  if (BigInt(p) * p > m) return {root, free * m};  // m is prime
  // No factor up to the trial bound: m is a prime, a prime square, or a
  // product of two distinct primes as long as it stays below bound^3.
  BigInt r;
  if (exact_integer_sqrt(m, r)) return {root * r, free};
  BigInt cube = BigInt(kTrialBound) * kTrialBound * kTrialBound;
  if (m < cube) return {root, free * m};
  throw Error(ErrorKind::ContractViolation, "radicand " + n.get_str() + " is too large to factor");
}

SurdValue SurdValue::root(const BigInt& radicand, const Rational& coefficient) {
  if (radicand < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt(" + radicand.get_str() + ")");
  SurdValue out;
  if (radicand == 0 || coefficient.is_zero()) return out;
  auto [k, f] = squarefree_split(radicand);
  out.add_term(f, coefficient * Rational(k));
  return out;
}

void SurdValue::add_term(const BigInt& radicand, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  if (radicand == 1) {
    rational_ += coefficient;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(radicand, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational SurdValue::coefficient(const BigInt& radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rational(0) : it->second;
}

SurdValue& SurdValue::operator+=(const SurdValue& o) {
  rational_ += o.rational_;
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

SurdValue& SurdValue::operator-=(const SurdValue& o) {
  rational_ -= o.rational_;
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

SurdValue& SurdValue::operator*=(const SurdValue& o) {
  SurdValue out;
  out.rational_ = rational_ * o.rational_;
  for (const auto& [d, c] : o.terms_) out.add_term(d, c * rational_);
  for (const auto& [d, c] : terms_) out.add_term(d, c * o.rational_);
  for (const auto& [d, c] : terms_) {
    for (const auto& [e, k] : o.terms_) {
      // sqrt(d)*sqrt(e) = g*sqrt((d/g)(e/g)) for squarefree d, e with g = gcd.
      BigInt g = gcd(d, e);
      BigInt f = (d / g) * (e / g);
      out.add_term(f, c * k * Rational(g));
    }
  }
  *this = std::move(out);
  return *this;
}

SurdValue operator/(SurdValue a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "surd divided by zero");
  a.rational_ /= b;
  for (auto& [d, c] : a.terms_) c /= b;
  return a;
}

std::string SurdValue::str() const {
  std::string out;
  if (!rational_.is_zero() || terms_.empty()) append_signed(out, rational_, "");
  for (const auto& [d, c] : terms_) append_signed(out, c, "sqrt(" + d.get_str() + ")");
  return out;
}

SurdValue surd_sqrt(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt(" + r.str() + ")");
  // sqrt(p/q) = sqrt(p*q)/q
  return SurdValue::root(r.numerator() * r.denominator(), Rational(BigInt(1), r.denominator()));
}

AreaExpr operator*(const AreaExpr& a, const AreaExpr& b) {
  if (a.has_pi() && b.has_pi())
    throw Error(ErrorKind::ContractViolation, "product of two pi-bearing expressions is not pi-linear");
  return {a.constant_ * b.constant_, a.constant_ * b.pi_ + a.pi_ * b.constant_};
}

std::string AreaExpr::str() const {
  if (!has_pi()) return constant_.str();
  std::string out = constant_.is_zero() ? "" : constant_.str();
  if (pi_.is_rational()) {
    append_signed(out, pi_.rational_part(), "pi");
  } else {
    out += out.empty() ? "" : " + ";
    out += "(" + pi_.str() + ")*pi";
  }
  return out;
}

Rational surd_eval(const SurdValue& e, const ApproximationProfile& profile) {
  Rational out = e.rational_part();
  for (const auto& [d, c] : e.terms()) {
    if (!d.fits_ulong_p())
      throw Error(ErrorKind::MissingConstant, "no substitute for sqrt(" + d.get_str() + ")");
    out += c * profile.root(d.get_ui());
  }
  return out;
}

Rational area_eval(const AreaExpr& e, const ApproximationProfile& profile) {
  Rational out = surd_eval(e.constant(), profile);
  if (e.has_pi()) out += surd_eval(e.pi_coefficient(), profile) * profile.pi_value();
  return out;
}

namespace {

struct Evaluated {
  detail::BigFloat value;
  detail::BigFloat magnitude;  // sum of absolute term sizes, for error bounds
};

Evaluated evaluate(const SurdValue& e, mpfr_prec_t bits) {
  using detail::BigFloat;
  BigFloat value = BigFloat::from(e.rational_part(), bits);
  BigFloat magnitude = BigFloat::from(e.rational_part().abs(), bits);
  for (const auto& [d, c] : e.terms()) {
    BigFloat root = BigFloat::sqrt_of(d, bits);
    value += BigFloat::from(c, bits) * root;
    magnitude += BigFloat::from(c.abs(), bits) * root;
  }
  return {value, magnitude};
}

Evaluated evaluate(const AreaExpr& e, mpfr_prec_t bits) {
  Evaluated out = evaluate(e.constant(), bits);
  if (e.has_pi()) {
    auto pi = detail::BigFloat::pi(bits);
    Evaluated coef = evaluate(e.pi_coefficient(), bits);
    out.value += coef.value * pi;
    out.magnitude += coef.magnitude * pi;
  }
  return out;
}

template <class Expr>
std::string adaptive_decimal(const Expr& e, int places) {
  if (places < 1) throw Error(ErrorKind::ContractViolation, "decimal_places must be at least 1");
  mpfr_prec_t bits = detail::bits_for_decimal_places(places);
  for (int attempt = 0; attempt < 24; ++attempt, bits *= 2) {
    Evaluated ev = evaluate(e, bits);
    detail::BigFloat error = ev.magnitude;
    // A few roundings per term; 2^-(bits-8) of the magnitude covers them.
    mpfr_mul_2si(error.get(), error.get(), -(bits - 8), MPFR_RNDU);
    std::string text = detail::settled_decimal(ev.value, error, places);
    if (!text.empty()) return text;
  }
  throw Error(ErrorKind::ContractViolation, "decimal digits did not settle");
}

}  // namespace

int SurdValue::sign() const {
  if (is_rational()) return rational_.sign();
  if (terms_.size() == 1 && rational_.is_zero()) return terms_.begin()->second.sign();
  // Distinct squarefree roots are linearly independent over Q, so a
  // nonzero canonical value is a nonzero real and this loop terminates.
  for (mpfr_prec_t bits = 128;; bits *= 2) {
    Evaluated ev = evaluate(*this, bits);
    detail::BigFloat error = ev.magnitude;
    mpfr_mul_2si(error.get(), error.get(), -(bits - 8), MPFR_RNDU);
    if (mpfr_cmpabs(ev.value.get(), error.get()) > 0) return ev.value.sign();
  }
}

std::string numeric_eval(const AreaExpr& e, int decimal_places) {
  if (!e.has_pi() && e.constant().is_rational()) return numeric_eval(e.constant().rational_part(), decimal_places);
  return adaptive_decimal(e, decimal_places);
}

std::string numeric_eval(const SurdValue& e, int decimal_places) {
  if (e.is_rational()) return numeric_eval(e.rational_part(), decimal_places);
  return adaptive_decimal(e, decimal_places);
}

std::string numeric_eval(const Rational& r, int decimal_places) {
  if (decimal_places < 1) throw Error(ErrorKind::ContractViolation, "decimal_places must be at least 1");
  return detail::rational_decimal(r, decimal_places);
}

}  // namespace susa

namespace susa::detail {

BigFloat evaluate_surd(const SurdValue& value, mpfr_prec_t bits) {
  return evaluate(value, bits).value;
}

}  // namespace susa::detail
