#include "susa/rational.hpp"

#include <cctype>

#include "susa/error.hpp"

namespace susa {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorKind::MalformedNumeral, "empty integer in '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw Error(ErrorKind::MalformedNumeral, "bare sign in '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::MalformedNumeral, "not an integer: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(text), 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(trim(text.substr(0, slash)), text);
  BigInt den = parse_integer(trim(text.substr(slash + 1)), text);
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  return Rational(q_.get_den(), q_.get_num());
}

BigInt Rational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

BigInt Rational::trunc() const {
  BigInt out;
  mpz_tdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow60(long exponent) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 60, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(BigInt(1), p) : Rational(p);
}

Rational pow_rational(const Rational& base, unsigned long exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

bool exact_integer_sqrt(const BigInt& value, BigInt& root) {
  if (value < 0) return false;
  BigInt r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t());
  if (rem != 0) return false;
  root = r;
  return true;
}

bool exact_rational_sqrt(const Rational& r, Rational& root) {
  BigInt n, d;
  if (!exact_integer_sqrt(r.numerator(), n) || !exact_integer_sqrt(r.denominator(), d)) return false;
  root = Rational(n, d);
  return true;
}

Rational parse_decimal(std::string_view text) {
  text = trim(text);
  bool negative = !text.empty() && text[0] == '-';
  if (negative) text.remove_prefix(1);
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw Error(ErrorKind::MalformedNumeral, "empty decimal");
  for (char c : std::string(whole) + std::string(frac)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::MalformedNumeral, "not a decimal: '" + std::string(text) + "'");
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  std::string digits = std::string(whole.empty() ? "0" : whole) + std::string(frac);
  Rational value(BigInt(digits, 10), scale);
  return negative ? -value : value;
}

}  // namespace susa
