#include "susa/sexagesimal.hpp"

#include <algorithm>
#include <cctype>

#include "susa/error.hpp"

namespace susa {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void check_digits(const DigitString& digits) {
  for (Digit d : digits) {
    if (d > 59) throw Error(ErrorKind::MalformedDigit, "digit " + std::to_string(d) + " is not in 0..59");
  }
}

DigitString integer_to_digits(BigInt value) {
  DigitString out;
  if (value == 0) return {0};
  while (value > 0) {
    BigInt rem = value % 60;
    out.push_back(static_cast<Digit>(rem.get_ui()));
    value /= 60;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

DigitString parse_groups(std::string_view text, std::string_view whole) {
  DigitString out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string_view group = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (group.empty())
      throw Error(ErrorKind::MalformedNumeral, "empty digit group in '" + std::string(whole) + "'");
    unsigned long value = 0;
    for (char c : group) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorKind::MalformedNumeral, "unexpected '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
      value = value * 10 + static_cast<unsigned long>(c - '0');
      if (value > 59)
        throw Error(ErrorKind::MalformedDigit, "digit group '" + std::string(group) + "' is not in 0..59");
    }
    out.push_back(static_cast<Digit>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const DigitString& digits) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace

Sexagesimal::Sexagesimal() : integer_{0} {}

Sexagesimal::Sexagesimal(bool negative, DigitString integer_digits, DigitString fractional_digits)
    : negative_(negative), integer_(std::move(integer_digits)), fractional_(std::move(fractional_digits)) {
  check_digits(integer_);
  check_digits(fractional_);
  auto first = std::find_if(integer_.begin(), integer_.end(), [](Digit d) { return d != 0; });
  integer_.erase(integer_.begin(), first);
  if (integer_.empty()) integer_.push_back(0);
  while (!fractional_.empty() && fractional_.back() == 0) fractional_.pop_back();
  if (is_zero()) negative_ = false;
}

Sexagesimal Sexagesimal::from_integer(long value) {
  BigInt magnitude = value < 0 ? BigInt(-value) : BigInt(value);
  return Sexagesimal(value < 0, integer_to_digits(magnitude), {});
}

Rational Sexagesimal::to_rational() const {
  BigInt whole = 0;
  for (Digit d : integer_) whole = whole * 60 + d;
  BigInt frac = 0;
  for (Digit d : fractional_) frac = frac * 60 + d;
  Rational value = Rational(whole) + Rational(frac) * pow60(-static_cast<long>(fractional_.size()));
  return negative_ ? -value : value;
}

std::string Sexagesimal::str() const {
  std::string out = negative_ ? "-" : "";
  out += join(integer_);
  out += ';';
  out += fractional_.empty() ? "0" : join(fractional_);
  return out;
}

FloatingSexagesimal::FloatingSexagesimal(DigitString digits) : digits_(std::move(digits)) {
  check_digits(digits_);
  auto first = std::find_if(digits_.begin(), digits_.end(), [](Digit d) { return d != 0; });
  digits_.erase(digits_.begin(), first);
  if (digits_.empty()) throw Error(ErrorKind::MalformedNumeral, "floating numeral needs a nonzero digit");
}

BigInt FloatingSexagesimal::digits_as_integer() const {
  BigInt out = 0;
  for (Digit d : digits_) out = out * 60 + d;
  return out;
}

std::string FloatingSexagesimal::str() const { return join(digits_); }

Numeral parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text = trim(text.substr(1));
  }
  if (text.empty()) throw Error(ErrorKind::MalformedNumeral, "empty numeral '" + std::string(whole) + "'");
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    DigitString digits = parse_groups(text, whole);
    if (std::all_of(digits.begin(), digits.end(), [](Digit d) { return d == 0; })) {
      if (digits.size() == 1) return Sexagesimal();
      throw Error(ErrorKind::MalformedNumeral, "floating numeral needs a nonzero digit");
    }
    if (negative) throw Error(ErrorKind::MalformedNumeral, "floating numeral cannot carry a sign");
    return FloatingSexagesimal(std::move(digits));
  }
  if (text.find(';', semi + 1) != std::string_view::npos)
    throw Error(ErrorKind::MalformedNumeral, "more than one ';' in '" + std::string(whole) + "'");
  DigitString integer = parse_groups(text.substr(0, semi), whole);
  std::string_view frac_text = trim(text.substr(semi + 1));
  // "x;" is accepted as x with no fractional digits.
  DigitString frac = frac_text.empty() ? DigitString{} : parse_groups(frac_text, whole);
  return Sexagesimal(negative, std::move(integer), std::move(frac));
}

Sexagesimal parse_absolute(std::string_view text) {
  Numeral n = parse(text);
  if (auto* s = std::get_if<Sexagesimal>(&n)) return *s;
  throw Error(ErrorKind::MalformedNumeral,
              "'" + std::string(trim(text)) + "' has no radix point; write it with ';' or fix its scale");
}

Sexagesimal place_value(const FloatingSexagesimal& f, long exponent) {
  return to_sexagesimal(Rational(f.digits_as_integer()) * pow60(exponent),
                        exponent < 0 ? static_cast<std::size_t>(-exponent) : 0);
}

std::optional<std::size_t> finite_places(const Rational& r) {
  BigInt d = r.denominator();
  std::size_t twos = 0, threes = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 3)) { d /= 3; ++threes; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
  if (d != 1) return std::nullopt;
  return std::max({(twos + 1) / 2, threes, fives});
}

std::pair<DigitString, DigitString> expand_digits(const Rational& r, std::size_t places) {
  Rational a = r.abs();
  BigInt whole = a.floor();
  Rational frac = a - Rational(whole);
  DigitString digits;
  digits.reserve(places);
  for (std::size_t i = 0; i < places; ++i) {
    frac *= Rational(60);
    BigInt d = frac.floor();
    digits.push_back(static_cast<Digit>(d.get_ui()));
    frac -= Rational(d);
  }
  return {integer_to_digits(whole), std::move(digits)};
}

Approximation from_rational(const Rational& r, std::size_t max_places, Rounding mode) {
  const bool negative = r.sign() < 0;
  Rational magnitude = r.abs();
  if (mode == Rounding::exact) {
    auto needed = finite_places(r);
    if (!needed)
      throw Error(ErrorKind::NotFinite, r.str() + " has no finite base-60 expansion");
    if (*needed > max_places)
      throw Error(ErrorKind::NotFinite, r.str() + " needs " + std::to_string(*needed) + " places, budget is " +
                                            std::to_string(max_places));
  }
  Rational scale = pow60(static_cast<long>(max_places));
  Rational scaled = magnitude * scale;
  BigInt units = scaled.floor();
  Rational remainder = scaled - Rational(units);
  if (mode == Rounding::round && remainder >= Rational(BigInt(1), BigInt(2))) units += 1;
  Rational kept = Rational(units) / scale;
  auto [integer, frac] = expand_digits(kept, max_places);
  Sexagesimal value(negative, std::move(integer), std::move(frac));
  return {value, (negative ? -kept : kept) == r};
}

Sexagesimal to_sexagesimal(const Rational& r, std::size_t max_places) {
  return from_rational(r, max_places, Rounding::exact).value;
}

Approximation truncate(const Sexagesimal& x, std::size_t places) {
  return from_rational(x.to_rational(), places, Rounding::truncate);
}

namespace {

Sexagesimal exact_result(const Rational& r) {
  // Ring operations on finite numerals always stay finite.
  return to_sexagesimal(r, *finite_places(r));
}

}  // namespace

Sexagesimal operator+(const Sexagesimal& a, const Sexagesimal& b) {
  return exact_result(a.to_rational() + b.to_rational());
}

Sexagesimal operator-(const Sexagesimal& a, const Sexagesimal& b) {
  return exact_result(a.to_rational() - b.to_rational());
}

Sexagesimal operator*(const Sexagesimal& a, const Sexagesimal& b) {
  return exact_result(a.to_rational() * b.to_rational());
}

Sexagesimal operator-(const Sexagesimal& a) {
  return Sexagesimal(!a.negative(), a.integer_digits(), a.fractional_digits());
}

Sexagesimal reciprocal(const Sexagesimal& x) {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of 0;0");
  Rational inv = x.to_rational().inverse();
  auto places = finite_places(inv);
  if (!places) throw Error(ErrorKind::NonRegular, x.str() + " has no finite reciprocal");
  return to_sexagesimal(inv, *places);
}

bool is_regular(const Rational& r) {
  if (r.is_zero()) throw Error(ErrorKind::ZeroInput, "regularity of zero is undefined");
  auto strip = [](BigInt v) {
    v = abs(v);
    for (unsigned long p : {2UL, 3UL, 5UL})
      while (mpz_divisible_ui_p(v.get_mpz_t(), p)) v /= p;
    return v == 1;
  };
  return strip(r.numerator()) && strip(r.denominator());
}

}  // namespace susa
