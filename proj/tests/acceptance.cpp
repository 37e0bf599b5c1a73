// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle/oracle.hpp"
#include "susa/algorithms.hpp"
#include "susa/cli.hpp"
#include "susa/error.hpp"
#include "susa/figures.hpp"
#include "susa/tablet.hpp"

using namespace susa;

namespace {

Sexagesimal sx(std::string_view t) { return parse_absolute(t); }

bool close_to(const std::string& decimal, const char* expected, const char* tolerance) {
  return (parse_decimal(decimal) - parse_decimal(expected)).abs() <= parse_decimal(tolerance);
}

bool two_barley_coefficient() {
  std::ostringstream out, err;
  int code = cli::run({"coeff", "two-barley", "--profile", "coarse"}, out, err);
  return code == cli::kOk && out.str() == "0;15\n" &&
         babylonian_area(make_figure(FigureKind::two_barley_circular), profile_coarse(), 4).exact == Rational(1, 4);
}

bool segment_collapse() {
  const auto& coarse = profile_coarse();
  bool zero = area_eval(exact_area(make_figure(FigureKind::quadrant_segment)), coarse).is_zero();
  auto two = babylonian_area(make_figure(FigureKind::two_barley_circular), coarse, 4);
  auto square = babylonian_area(make_figure(FigureKind::inscribed_square), coarse, 4);
  return zero && two.exact == square.exact && two.truncated.value == square.truncated.value;
}

bool inscribed_square() {
  Derivation d = derive_inscribed_square();
  SurdValue expected = SurdValue(2) - SurdValue::root(3);
  return d.result == expected && d.result.str() == "2 - sqrt(3)" &&
         close_to(numeric_eval(d.result, 12), "0.267949", "0.000001") &&
         numeric_eval(d.result, 20) == oracle::truncated_decimal(2 - oracle::root(3), 20);
}

bool sqrt21_iteration() {
  const std::vector<std::string> exact{"9/2", "14/3", "55/12", "252/55", "6049/1320"};
  const std::vector<std::string> shown{"4;30", "4;40", "4;35", "4;34,54,32,43", "4;34,57,16,21"};
  IterationTrace t = babylonian_sqrt(Rational(21), 5);
  if (t.steps.size() != 5) return false;
  // independent recomputation of the same recurrence
  std::vector<oracle::BigRational> a{oracle::BigRational(9, 2)};
  for (int k = 2; k <= 5; ++k)
    a.push_back(k % 2 == 0 ? oracle::BigRational(21) / a.back() : (a[a.size() - 2] + a.back()) / 2);
  for (std::size_t i = 0; i < 5; ++i) {
    if (t.steps[i].value.str() != exact[i] || oracle::rational_text(a[i]) != exact[i]) return false;
    if (from_rational(t.steps[i].value, 4).value.str() != shown[i]) return false;
  }
  return true;
}

bool sqrt2_endpoint() {
  IterationTrace t = babylonian_sqrt(Rational(2), 5);
  Sexagesimal truncated = from_rational(t.steps.back().value, 3).value;
  const Sexagesimal attested = find_record("YBC7243.10").attested_value();
  oracle::BigRational digits = oracle::digits_value(false, {1}, {24, 51, 10});
  return t.steps.back().value == Rational(577, 408) && truncated == attested && truncated == sx("1;24,51,10") &&
         numeric_eval(truncated.to_rational(), 9) == "1.414212962" &&
         oracle::truncated_decimal(oracle::Dec(digits), 9) == "1.414212962";
}

bool quadratic_solver() {
  SurdValue p = SurdValue::root(6) / Rational(2);
  QuadraticSolution s = solve_quadratic(p, SurdValue(Rational(1, 2)));
  SurdValue expected = (SurdValue::root(14) - SurdValue::root(6)) / Rational(4);
  return s.root == expected && s.completed_square == Rational(14, 16) &&
         s.root * s.root + p * s.root == SurdValue(Rational(1, 2));
}

bool line6_sixth() {
  Sexagesimal sixth = sixth_of_line6();
  oracle::BigRational expected = oracle::BigRational(8881, 32400) / 6;
  return sixth == sx("0;2,44,27,46,40") &&
         sixth.to_rational().str() == oracle::rational_text(expected) &&
         numeric_eval(sixth.to_rational(), 6) == "0.045684" &&
         oracle::truncated_decimal(oracle::Dec(expected), 6) == "0.045684";
}

bool triangle_value() {
  SurdValue tri = SurdValue(Rational(35, 64)) - SurdValue::root(21, Rational(7, 64));
  std::string value = numeric_eval(tri, 6);
  oracle::Dec reference = 7 * (5 - oracle::root(21)) / 64;
  Rational gap = parse_decimal("0.045684") - parse_decimal("0.045655");
  std::string segment = numeric_segment_area(6);
  double s = static_cast<double>((oracle::root(14) - oracle::root(6)) / 4);
  return value == "0.045655" && oracle::truncated_decimal(reference, 6) == "0.045655" &&
         gap < parse_decimal(segment) && close_to(segment, "0.0028", "0.0002") &&
         std::abs(std::stod(numeric_segment_area(10)) - oracle::segment_area(s)) < 1e-9;
}

bool log_thickness() {
  Sexagesimal c = circle_coefficient(profile_fine_pi());
  Rational pi = Rational(1) / (Rational(4) * c.to_rational());
  return c == sx("0;4,48") && to_sexagesimal(pi) == sx("3;7,30") && pi == parse_decimal("3.125") &&
         reciprocal(c * Sexagesimal::from_integer(4)) == sx("3;7,30");
}

bool line5_hypothesis() {
  VerificationReport r = verify(find_record("TMS3.5"));
  return r.verdict == Verdict::mismatch && r.discrepancy == sx("0;1").to_rational() &&
         r.attested == sx("0;16") && r.reconstruction_truncated.value == sx("0;15");
}

bool implied_sqrt21_direction() {
  Sqrt21Interval iv = implied_sqrt21_interval();
  IterationTrace t = babylonian_sqrt(Rational(21), 5);
  const Rational a5 = t.steps.back().value;
  // a5 lies above the root, so 21/a5 lies below it
  bool bracket = a5 * a5 > Rational(21) && t.steps.back().side == RootSide::above_root;
  const Rational below = Rational(21) / a5;
  bool exact = iv.lower < iv.upper && iv.upper * iv.upper < Rational(21) && iv.upper < below && iv.upper < a5;
  oracle::BigRational upper(oracle::BigInteger(iv.upper.numerator().get_str()),
                            oracle::BigInteger(iv.upper.denominator().get_str()));
  bool numeric = oracle::Dec(upper) < oracle::root(21);
  return bracket && exact && numeric && iv.below_true_root;
}

struct Numeral {
  bool negative;
  std::vector<int> whole, frac;
  Sexagesimal value() const {
    return Sexagesimal(negative, DigitString(whole.begin(), whole.end()), DigitString(frac.begin(), frac.end()));
  }
  oracle::BigRational exact() const { return oracle::digits_value(negative, whole, frac); }
};

Numeral random_numeral(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, 59), nonzero(1, 59), len(0, 4), coin(0, 1);
  Numeral n{coin(rng) == 1, {}, {}};
  int w = len(rng), f = len(rng);
  if (w == 0) n.whole = {0};
  for (int i = 0; i < w; ++i) n.whole.push_back(i == 0 ? nonzero(rng) : digit(rng));
  for (int i = 0; i < f; ++i) n.frac.push_back(i + 1 == f ? nonzero(rng) : digit(rng));
  return n;
}

bool sexagesimal_properties() {
  std::mt19937_64 rng(60);
  for (int i = 0; i < 10000; ++i) {
    Numeral a = random_numeral(rng), b = random_numeral(rng);
    Sexagesimal x = a.value(), y = b.value();
    if (x.to_rational().str() != oracle::rational_text(a.exact())) return false;
    if (parse_absolute(x.str()) != x) return false;
    if (from_rational(x.to_rational(), x.places(), Rounding::exact).value != x) return false;
    if ((x + y).to_rational().str() != oracle::rational_text(a.exact() + b.exact())) return false;
    if ((x - y).to_rational().str() != oracle::rational_text(a.exact() - b.exact())) return false;
    if ((x * y).to_rational().str() != oracle::rational_text(a.exact() * b.exact())) return false;
  }
  return true;
}

bool iteration_invariants() {
  for (long n : {2L, 3L, 5L, 21L, 84L}) {
    const Rational target(n);
    IterationTrace t = babylonian_sqrt(target, 8);
    if (t.steps.size() != 8) return false;
    Rational previous_width;
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const Rational v = t.steps[i].value, partner = target / v;
      const Rational lo = std::min(v, partner), hi = std::max(v, partner);
      if (lo * lo > target || hi * hi < target) return false;
      if ((t.steps[i].side == RootSide::below_root) != (v * v < target)) return false;
      if (i % 2 == 1) {
        Rational width = (t.steps[i - 1].value - v).abs();
        if (i > 1 && !(width < previous_width)) return false;
        previous_width = width;
      }
    }
  }
  return true;
}

bool squarefree(long v) {
  for (long p = 2; p * p <= v; ++p)
    if (v % (p * p) == 0) return false;
  return true;
}

bool surd_canonicalization() {
  const long radicands[] = {2, 3, 5, 6, 7, 14, 21, 84};
  for (long d : radicands)
    for (long e : radicands) {
      SurdValue product = SurdValue::root(d) * SurdValue::root(e);
      for (const auto& [radicand, coefficient] : product.terms())
        if (radicand < 2 || !squarefree(radicand.get_si()) || coefficient.is_zero()) return false;
      SurdValue squared = product * product;
      if (!squared.is_rational() || squared.rational_part() != Rational(d * e)) return false;
      oracle::Dec expected = oracle::root(static_cast<int>(d * e));
      if (numeric_eval(product, 30) != oracle::truncated_decimal(expected, 30)) return false;
    }
  return true;
}

bool property_suites() { return sexagesimal_properties() && iteration_invariants() && surd_canonicalization(); }

bool conjecture_check() {
  ConjectureReport c = check_sqrt21_conjecture(sx("4;34,57,15,10,28"));
  oracle::BigRational x = oracle::digits_value(false, {4}, {34, 57, 15, 10, 28});
  oracle::BigRational expected = oracle::BigRational(7) * (5 - x) / 64;
  bool flag_consistent = c.agrees_with_cited == (c.per_triangle_full.value == c.cited_per_triangle);
  std::cout << "    per-triangle " << c.per_triangle.str() << " = " << c.per_triangle_full.value.str()
            << (c.agrees_with_cited ? " agrees with " : " disagrees with ") << c.cited_per_triangle.str() << '\n';
  return c.per_triangle.str() == oracle::rational_text(expected) && c.per_triangle_full.exact &&
         c.cited_per_triangle == sx("0;2,44,27,46,40,1,25") && flag_consistent;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"Two-barley coefficient is 0;15 under coarse", two_barley_coefficient},
      {"Segment collapse under pi = 3", segment_collapse},
      {"Inscribed square is 2 - sqrt(3)", inscribed_square},
      {"sqrt(21) iteration approximants and truncations", sqrt21_iteration},
      {"sqrt(2) endpoint matches 1;24,51,10", sqrt2_endpoint},
      {"Quadratic solver for the hexagon side", quadratic_solver},
      {"Line 6 divided by six", line6_sixth},
      {"Triangle value and segment plausibility", triangle_value},
      {"Circle coefficient 0;4,48 and pi 3;7,30", log_thickness},
      {"Line 5 mismatch with discrepancy 0;1", line5_hypothesis},
      {"Implied sqrt(21) interval lies below the root", implied_sqrt21_direction},
      {"Property suites", property_suites},
      {"sqrt(21) conjecture check", conjecture_check},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    std::string error;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first;
    if (!error.empty()) std::cout << " (" << error << ")";
    std::cout << '\n';
    if (!ok) ++failures;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
