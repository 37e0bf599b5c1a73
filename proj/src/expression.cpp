#include "susa/expression.hpp"

#include <cctype>
#include <string>

#include "susa/error.hpp"

namespace susa {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::MalformedNumeral,
                what + " at column " + std::to_string(pos_ + 1) + " of '" + std::string(text_) + "'");
  }

  std::string_view text() const { return text_; }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class SexagesimalParser {
 public:
  SexagesimalParser(std::string_view text, long exponent) : cur_(text), exponent_(exponent) {}

  Rational parse() {
    Rational v = expr();
    if (!cur_.done()) cur_.fail("unexpected input");
    return v;
  }

 private:
  Rational expr() {
    Rational v = term();
    while (true) {
      if (cur_.accept('+')) v += term();
      else if (cur_.accept('-')) v -= term();
      else return v;
    }
  }
  Rational term() {
    Rational v = unary();
    while (cur_.accept('*')) v *= unary();
    return v;
  }
  Rational unary() {
    if (cur_.accept('-')) return -unary();
    return primary();
  }
  Rational primary() {
    if (cur_.accept('(')) {
      Rational v = expr();
      cur_.expect(')');
      return v;
    }
    if (cur_.accept_word("recip")) {
      Rational v = primary();
      return reciprocal(to_sexagesimal(v)).to_rational();
    }
    return numeral();
  }
  Rational numeral() {
    cur_.skip_space();
    const std::string_view text = cur_.text();
    std::size_t end = cur_.pos();
    auto is_part = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ';'; };
    // Spaces are allowed next to ',' and ';' inside a numeral.
    while (end < text.size()) {
      if (is_part(text[end])) {
        ++end;
        continue;
      }
      if (text[end] == ' ') {
        std::size_t next = text.find_first_not_of(' ', end);
        char after = next == std::string_view::npos ? '\0' : text[next];
        char before = end > 0 ? text[end - 1] : '\0';
        if (after == ',' || after == ';' || before == ',' || before == ';') {
          end = next == std::string_view::npos ? text.size() : next;
          continue;
        }
      }
      break;
    }
    if (end == cur_.pos()) cur_.fail("expected a numeral");
    std::string_view literal = text.substr(cur_.pos(), end - cur_.pos());
    cur_.advance(end - cur_.pos());
    Numeral n = susa::parse(literal);
    if (auto* f = std::get_if<FloatingSexagesimal>(&n)) return place_value(*f, exponent_).to_rational();
    return std::get<Sexagesimal>(n).to_rational();
  }

  Cursor cur_;
  long exponent_;
};

class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : cur_(text) {}

  SurdValue parse() {
    SurdValue v = expr();
    if (!cur_.done()) cur_.fail("unexpected input");
    return v;
  }

 private:
  SurdValue expr() {
    SurdValue v = term();
    while (true) {
      if (cur_.accept('+')) v += term();
      else if (cur_.accept('-')) v -= term();
      else return v;
    }
  }
  SurdValue term() {
    SurdValue v = unary();
    while (true) {
      if (cur_.accept('*')) {
        v *= unary();
      } else if (cur_.accept('/')) {
        SurdValue d = unary();
        if (!d.is_rational()) cur_.fail("divisor must be rational");
        v = v / d.rational_part();
      } else {
        return v;
      }
    }
  }
  SurdValue unary() {
    if (cur_.accept('-')) return -unary();
    return primary();
  }
  SurdValue primary() {
    if (cur_.accept('(')) {
      SurdValue v = expr();
      cur_.expect(')');
      return v;
    }
    if (cur_.accept_word("sqrt")) {
      cur_.expect('(');
      SurdValue arg = expr();
      cur_.expect(')');
      if (!arg.is_rational())
        throw Error(ErrorKind::ContractViolation, "sqrt of the non-rational " + arg.str() + " (denesting unsupported)");
      return surd_sqrt(arg.rational_part());
    }
    cur_.skip_space();
    const std::string_view text = cur_.text();
    std::size_t end = cur_.pos();
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == cur_.pos()) cur_.fail("expected an integer, sqrt(...) or '('");
    BigInt value(std::string(text.substr(cur_.pos(), end - cur_.pos())), 10);
    cur_.advance(end - cur_.pos());
    return SurdValue(Rational(value));
  }

  Cursor cur_;
};

}  // namespace

Sexagesimal evaluate_expression(std::string_view text, long exponent) {
  Rational value = SexagesimalParser(text, exponent).parse();
  // + - * and regular reciprocals keep every intermediate finite.
  return to_sexagesimal(value, *finite_places(value));
}

SurdValue parse_surd(std::string_view text) { return SurdParser(text).parse(); }

}  // namespace susa
