#include "doctest.h"

#include "oracle/oracle.hpp"
#include "susa/error.hpp"
#include "susa/expression.hpp"
#include "susa/figures.hpp"

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

Sexagesimal sx(std::string_view t) { return parse_absolute(t); }
AreaExpr area(FigureKind k) { return exact_area(make_figure(k)); }
AreaExpr pi_over(long n) { return AreaExpr::pi() / Rational(n); }

double as_double(const std::string& decimal) { return std::stod(decimal); }

}  // namespace

TEST_CASE("standard profiles") {
  CHECK(profile_coarse().pi_value() == Rational(3));
  CHECK(to_sexagesimal(*profile_coarse().triangle_coefficient).str() == "0;26,15");
  CHECK(*profile_coarse().triangle_coefficient == Rational(7, 16));
  CHECK(profile_coarse().root(3) == sx("1;45").to_rational());
  CHECK(profile_coarse().root(2) == sx("1;24,51,10").to_rational());
  CHECK_FALSE(profile_coarse().roots.contains(21));
  CHECK(to_sexagesimal(profile_fine_pi().pi_value()) == sx("3;7,30"));
  CHECK(profile_fine_pi().pi_value() == Rational(25, 8));
  CHECK(standard_profiles().size() == 2);
  CHECK(&profile_from_id("fine-pi") == &profile_fine_pi());
  CHECK(kind_of([] { profile_from_id("finest"); }) == ErrorKind::UnknownIdentifier);
}

TEST_CASE("figure identifiers round trip") {
  for (auto kind : all_figure_kinds()) CHECK(figure_from_id(figure_id(kind)) == kind);
  CHECK(figure_id(FigureKind::inscribed_square) == "square-in-two-barley");
  CHECK(kind_of([] { figure_from_id("hexagon"); }) == ErrorKind::UnknownIdentifier);
}

TEST_CASE("exact areas at unit quadrant radius") {
  const SurdValue sqrt3 = SurdValue::root(3);
  CHECK(area(FigureKind::circle) == AreaExpr::pi());
  CHECK(area(FigureKind::quadrant) == pi_over(4));
  CHECK(area(FigureKind::barley) == pi_over(2) - 1);
  CHECK(area(FigureKind::two_barley_circular) == pi_over(3) + 1 - AreaExpr(sqrt3));
  CHECK(area(FigureKind::inscribed_square) == AreaExpr(SurdValue(2) - sqrt3));
  CHECK(area(FigureKind::quadrant_segment) == pi_over(12) - AreaExpr(Rational(1, 4)));
  CHECK(area(FigureKind::equilateral_triangle) == AreaExpr(sqrt3 / Rational(4)));
  CHECK(area(FigureKind::three_barley_hexagonal) ==
        AreaExpr(SurdValue(6) * sqrt3 / Rational(4) * parse_surd("(5 - sqrt(21))/4")));

  Figure total = make_figure(FigureKind::three_barley_hexagonal);
  total.with_segments = true;
  CHECK(kind_of([&] { exact_area(total); }) == ErrorKind::NoClosedForm);
  CHECK(kind_of([] { exact_area(make_figure(FigureKind::circle, SurdValue(0))); }) == ErrorKind::NonPositive);
}

TEST_CASE("areas scale with the square of the scale") {
  CHECK(exact_area(make_figure(FigureKind::circle, SurdValue(2))) == AreaExpr::pi() * AreaExpr(4));
  CHECK(exact_area(make_figure(FigureKind::equilateral_triangle, SurdValue::root(2))) ==
        AreaExpr(SurdValue::root(3) / Rational(2)));
}

TEST_CASE("barley and two-barley areas agree with quadrature") {
  CHECK(std::abs(as_double(numeric_eval(area(FigureKind::barley), 15)) - oracle::barley_area()) < 1e-10);
  CHECK(std::abs(as_double(numeric_eval(area(FigureKind::two_barley_circular), 15)) - oracle::two_barley_area()) <
        1e-10);
}

TEST_CASE("two-barley decomposes into the square and four segments") {
  CHECK(area(FigureKind::two_barley_circular) ==
        area(FigureKind::inscribed_square) + area(FigureKind::quadrant_segment) * AreaExpr(4));
}

TEST_CASE("segments vanish when pi is 3") {
  CHECK(area_eval(area(FigureKind::quadrant_segment), profile_coarse()) == Rational(0));
  CHECK(babylonian_area(make_figure(FigureKind::two_barley_circular), profile_coarse(), 4).exact ==
        babylonian_area(make_figure(FigureKind::inscribed_square), profile_coarse(), 4).exact);
}

TEST_CASE("babylonian areas") {
  auto two = babylonian_area(make_figure(FigureKind::two_barley_circular), profile_coarse(), 4);
  CHECK(two.truncated.value == sx("0;15"));
  CHECK(two.truncated.exact);

  auto tri = babylonian_area(make_figure(FigureKind::equilateral_triangle), profile_coarse(), 4);
  CHECK(tri.truncated.value == sx("0;26,15"));

  // triangle coefficient replaces sqrt(3)/4 wholesale; without it sqrt(3) is substituted
  ApproximationProfile only_root{"root-only", Rational(3), {{3, Rational(7, 4)}}, std::nullopt};
  CHECK(babylonian_area(make_figure(FigureKind::equilateral_triangle), only_root, 4).exact == Rational(7, 16));
  ApproximationProfile rival{"rival", Rational(3), {{3, Rational(26, 15)}}, Rational(7, 16)};
  CHECK(babylonian_area(make_figure(FigureKind::equilateral_triangle), rival, 4).exact == Rational(7, 16));

  const Rational a5(6049, 1320);
  auto hex = babylonian_area(make_figure(FigureKind::three_barley_hexagonal), profile_coarse().with_root(21, a5), 4);
  CHECK(hex.exact == Rational(6) * Rational(7, 16) * (Rational(5) - a5) / Rational(4));
  CHECK(hex.exact == Rational(3857, 14080));
  CHECK(hex.truncated.value == sx("0;16,26,9,53"));
  CHECK_FALSE(hex.truncated.exact);

  CHECK(kind_of([] { babylonian_area(make_figure(FigureKind::three_barley_hexagonal), profile_coarse(), 4); }) ==
        ErrorKind::MissingConstant);
  CHECK(kind_of([] { babylonian_area(make_figure(FigureKind::two_barley_circular), profile_fine_pi(), 4); }) ==
        ErrorKind::MissingConstant);
}

TEST_CASE("circle coefficient and area from circumference") {
  CHECK(circle_coefficient(profile_fine_pi()) == sx("0;4,48"));
  CHECK(circle_coefficient(profile_coarse()) == sx("0;5"));
  auto c = circle_area_from_circumference(Sexagesimal::from_integer(6), profile_coarse());
  CHECK(c.area == Sexagesimal::from_integer(3));
  CHECK(c.coefficient == sx("0;5"));
  CHECK(kind_of([] { circle_area_from_circumference(Sexagesimal(), profile_coarse()); }) == ErrorKind::NonPositive);
  ApproximationProfile seven{"pi-22/7", Rational(22, 7), {}, std::nullopt};
  CHECK(kind_of([&] { circle_coefficient(seven); }) == ErrorKind::NonRegular);
}

TEST_CASE("inscribed square derivation") {
  Derivation d = derive_inscribed_square();
  CHECK(d.result == parse_surd("2 - sqrt(3)"));
  bool found = false;
  for (const auto& s : d.steps)
    if (s.label == "BD^2") {
      found = true;
      CHECK(s.value == parse_surd("1 - sqrt(3) + 3/4"));
    }
  CHECK(found);
  CHECK(numeric_eval(d.result, 6) == "0.267949");
  CHECK(numeric_eval(d.result, 30) == oracle::truncated_decimal(2 - oracle::root(3), 30));
}

TEST_CASE("three-barley side derivation") {
  SideDerivation d = derive_three_barley_side();
  const SurdValue s = d.derivation.result;
  CHECK(s == parse_surd("(sqrt(14) - sqrt(6))/4"));
  CHECK(d.p == parse_surd("sqrt(6)/2"));
  CHECK(d.q == SurdValue(Rational(1, 2)));
  CHECK(d.completed_square == Rational(14, 16));
  CHECK(d.side_squared == parse_surd("(5 - sqrt(21))/4"));
  CHECK(d.side_squared * Rational(7, 16) == parse_surd("7*(5 - sqrt(21))/64"));
  CHECK(numeric_eval(s, 6) == "0.323041");
  CHECK(numeric_eval(s, 30) == oracle::truncated_decimal((oracle::root(14) - oracle::root(6)) / 4, 30));
  // substituting back into the defining right-triangle relation
  const SurdValue ho_oc = SurdValue::root(3) * s / Rational(2) + SurdValue::root(2) / Rational(2);
  CHECK((s * s / Rational(4) + ho_oc * ho_oc) == SurdValue(1));
}

TEST_CASE("segment areas") {
  const std::string seg = numeric_segment_area(6);
  CHECK(seg == "0.002831");
  const double s = as_double(numeric_eval(derive_three_barley_side().derivation.result, 17));
  CHECK(std::abs(as_double(numeric_segment_area(12)) - oracle::segment_area(s)) < 1e-11);
  CHECK(segment_area_for_chord(SurdValue(0), 6) == "0.000000");
  // a diameter cuts off half the circle
  CHECK(segment_area_for_chord(SurdValue(2), 20) == oracle::truncated_decimal(oracle::pi() / 2, 20));
  CHECK(std::abs(as_double(segment_area_for_chord(SurdValue::root(2), 12)) - oracle::segment_area(std::sqrt(2.0))) <
        1e-11);
  CHECK(kind_of([] { segment_area_for_chord(SurdValue(3), 6); }) == ErrorKind::OutOfRange);

  const Rational gap = parse_decimal("0.045684") - parse_decimal("0.045655");
  CHECK(parse_decimal(seg) > gap);
}

TEST_CASE("three-barley numeric total") {
  ThreeBarleyNumeric n = numeric_three_barley_total(6);
  const oracle::Dec side = (oracle::root(14) - oracle::root(6)) / 4;
  const oracle::Dec triangles = 6 * oracle::root(3) / 4 * side * side;
  CHECK(n.triangles == oracle::truncated_decimal(triangles, 6));
  CHECK(n.triangles == "0.271125");
  const double seg = oracle::segment_area(static_cast<double>(side));
  CHECK(std::abs(as_double(n.segments) - 6 * seg) < 2e-6);
  CHECK(std::abs(as_double(n.total) - (static_cast<double>(triangles) + 6 * seg)) < 2e-6);
  CHECK(parse_decimal(n.total) > parse_decimal(n.triangles));
  // the 7/16 variant of the triangles
  CHECK(numeric_eval(parse_surd("6*7*(5 - sqrt(21))/64"), 6) == "0.273934");
}

TEST_CASE("barley arc coefficient") {
  auto coarse = barley_arc_coefficient(profile_coarse());
  CHECK(coarse.exact == Rational(2, 9));
  CHECK(coarse.truncated.value == sx("0;13,20"));
  auto fine = barley_arc_coefficient(profile_fine_pi());
  CHECK(fine.exact == Rational(144, 625));
  CHECK(fine.truncated.value == sx("0;13,49,26,24"));
  CHECK(fine.truncated.exact);
  // coefficient * arc^2 = area
  const Rational arc = profile_coarse().pi_value() / Rational(2);
  CHECK(coarse.exact * arc * arc == area_eval(area(FigureKind::barley), profile_coarse()));
  CHECK(kind_of([] { barley_arc_coefficient(ApproximationProfile{"none", {}, {}, {}}); }) ==
        ErrorKind::MissingConstant);
}
