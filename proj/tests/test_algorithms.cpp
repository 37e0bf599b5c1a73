#include "doctest.h"

#include "oracle/oracle.hpp"
#include "susa/algorithms.hpp"
#include "susa/error.hpp"
#include "susa/expression.hpp"

using namespace susa;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ContractViolation;
}

/// Independent mean/quotient iteration over Boost rationals.
std::vector<std::string> oracle_iteration(int n, int seed_floor, int steps) {
  std::vector<oracle::BigRational> a{oracle::BigRational(2 * seed_floor + 1, 2)};
  for (int k = 2; k <= steps; ++k) {
    if (k % 2 == 0)
      a.push_back(oracle::BigRational(n) / a.back());
    else
      a.push_back((a[a.size() - 2] + a.back()) / 2);
  }
  std::vector<std::string> out;
  for (const auto& v : a) out.push_back(oracle::rational_text(v));
  return out;
}

std::vector<std::string> values(const IterationTrace& t) {
  std::vector<std::string> out;
  for (const auto& s : t.steps) out.push_back(s.value.str());
  return out;
}

std::string places(const Rational& r, std::size_t p) { return from_rational(r, p).value.str(); }

}  // namespace

TEST_CASE("sqrt(21) iteration") {
  IterationTrace t = babylonian_sqrt(Rational(21), 5);
  CHECK(values(t) == std::vector<std::string>{"9/2", "14/3", "55/12", "252/55", "6049/1320"});
  CHECK(values(t) == oracle_iteration(21, 4, 5));
  CHECK(places(t.steps[0].value, 4) == "4;30");
  CHECK(places(t.steps[1].value, 4) == "4;40");
  CHECK(places(t.steps[2].value, 4) == "4;35");
  CHECK(places(t.steps[3].value, 4) == "4;34,54,32,43");
  CHECK(places(t.steps[4].value, 4) == "4;34,57,16,21");
  CHECK(t.steps[0].side == RootSide::below_root);
  CHECK(t.steps[1].side == RootSide::above_root);
  CHECK(t.steps[3].side == RootSide::below_root);
}

TEST_CASE("sqrt(2) iteration reaches the diagonal coefficient") {
  IterationTrace t = babylonian_sqrt(Rational(2), 5);
  CHECK(values(t) == std::vector<std::string>{"3/2", "4/3", "17/12", "24/17", "577/408"});
  CHECK(values(t) == oracle_iteration(2, 1, 5));
  CHECK(places(t.last(), 3) == "1;24,51,10");
}

TEST_CASE("iteration errors") {
  CHECK(kind_of([] { babylonian_sqrt(Rational(4), 3); }) == ErrorKind::PerfectSquare);
  CHECK(kind_of([] { babylonian_sqrt(Rational(9, 4), 3); }) == ErrorKind::PerfectSquare);
  CHECK(kind_of([] { babylonian_sqrt(Rational(0), 3); }) == ErrorKind::NonPositive);
  CHECK(kind_of([] { babylonian_sqrt(Rational(-2), 3); }) == ErrorKind::NonPositive);
  CHECK(kind_of([] { babylonian_sqrt(Rational(1, 2), 3); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { babylonian_sqrt(Rational(21), 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("non-integer radicands seed from the integer bracket") {
  CHECK(floor_sqrt(Rational(21)) == 4);
  CHECK(floor_sqrt(Rational(99, 4)) == 4);
  CHECK(floor_sqrt(Rational(100, 4)) == 5);
  IterationTrace t = babylonian_sqrt(Rational(7, 2), 3);
  CHECK(t.steps[0].value == Rational(3, 2));
}

TEST_CASE("truncated iteration") {
  IterationTrace t = truncated_iteration(Rational(21), 5, 4);
  CHECK(places(t.steps[3].value, 8) == "4;34,54,32,43");
  CHECK(places(t.steps[4].exact, 8) == "4;34,57,16,21,30");
  CHECK(places(t.steps[4].value, 8) == "4;34,57,16,21");

  IterationTrace wide = truncated_iteration(Rational(21), 5, 20);
  IterationTrace exact = babylonian_sqrt(Rational(21), 5);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(places(wide.steps[i].value, 4) == places(exact.steps[i].value, 4));

  IterationTrace two = truncated_iteration(Rational(2), 5, 3);
  CHECK((two.last() - Rational(577, 408)).abs() < pow60(-3));
  CHECK(kind_of([] { truncated_iteration(Rational(21), 5, 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("bracketing and contraction over eight steps") {
  for (long n : {2L, 3L, 5L, 21L, 84L}) {
    CAPTURE(n);
    const Rational target(n);
    IterationTrace t = babylonian_sqrt(target, 8);
    REQUIRE(t.steps.size() == 8);
    CHECK(t.steps[0].kind == StepKind::mean);
    std::vector<Rational> widths;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const auto& s = t.steps[i];
      if (i > 0) CHECK(s.kind == (s.k % 2 == 0 ? StepKind::quotient : StepKind::mean));
      const Rational partner = target / s.value;
      const Rational lo = std::min(s.value, partner), hi = std::max(s.value, partner);
      CHECK(lo * lo <= target);
      CHECK(target <= hi * hi);
      CHECK((s.side == RootSide::below_root) == (s.value * s.value < target));
      if (s.kind == StepKind::mean && s.k >= 3) CHECK(s.value * s.value >= target);
      if (s.k % 2 == 0) widths.push_back((t.steps[i - 1].value - s.value).abs());
    }
    for (std::size_t i = 1; i < widths.size(); ++i) CHECK(widths[i] < widths[i - 1]);
  }
}

TEST_CASE("completing the square") {
  QuadraticSolution s = solve_quadratic(parse_surd("sqrt(6)/2"), Rational(1, 2));
  CHECK(s.root == parse_surd("(sqrt(14) - sqrt(6))/4"));
  CHECK(s.completed_square == Rational(14, 16));
  CHECK(s.half_p == parse_surd("sqrt(6)/4"));
  CHECK((s.root * s.root + s.p * s.root - s.q).is_zero());

  CHECK(solve_quadratic(SurdValue(0), Rational(14, 16)).root == parse_surd("sqrt(14)/4"));
  CHECK(solve_quadratic(SurdValue(2), SurdValue(3)).root == SurdValue(1));

  CHECK(kind_of([] { solve_quadratic(parse_surd("sqrt(2)"), parse_surd("sqrt(3)")); }) ==
        ErrorKind::IrrationalCompletedSquare);
  CHECK(kind_of([] { solve_quadratic(SurdValue(0), SurdValue(-1)); }) == ErrorKind::NegativeDiscriminant);
  CHECK(kind_of([] { solve_quadratic(SurdValue(0), SurdValue(0)); }) == ErrorKind::NoPositiveRoot);
}

TEST_CASE("sqrt(21) back-solver") {
  const Rational line6 = parse_absolute("0;16,26,46,40").to_rational();
  CHECK(line6 == Rational(8881, 32400));
  const Rational x = back_solve_sqrt21(line6);
  CHECK(x == Rational(5) - Rational(32, 21) * Rational(8881, 32400));
  CHECK(numeric_eval(x, 5) == "4.58231");
  CHECK(back_solve_sqrt21(Rational(21, 32)) == Rational(4));
  CHECK(hexagon_area_for_sqrt21(x) == line6);

  // near-true root round trip at high precision
  const Rational near_root = Rational::parse("458257569495584000658804719/100000000000000000000000000");
  const Rational c = hexagon_area_for_sqrt21(near_root);
  CHECK(back_solve_sqrt21(c) == near_root);
  CHECK(numeric_eval(back_solve_sqrt21(c), 20) == oracle::truncated_decimal(oracle::root(21), 20));

  CHECK(kind_of([] { back_solve_sqrt21(Rational(0)); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { back_solve_sqrt21(Rational(105, 32)); }) == ErrorKind::OutOfRange);
}

TEST_CASE("property: back-solve inverts the hexagon area") {
  for (long p = 1; p < 500; p += 7) {
    for (long q = 1; q < 40; q += 3) {
      const Rational x(p, q * 10);
      if (x >= Rational(5)) continue;
      REQUIRE(back_solve_sqrt21(hexagon_area_for_sqrt21(x)) == x);
    }
  }
}
