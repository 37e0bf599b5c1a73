#include "susa/figures.hpp"

#include <array>

#include "bigfloat.hpp"
#include "susa/algorithms.hpp"
#include "susa/error.hpp"

namespace susa {

namespace {

struct FigureName {
  FigureKind kind;
  std::string_view id;
};

constexpr std::array<FigureName, 8> kFigureNames{{
    {FigureKind::circle, "circle"},
    {FigureKind::quadrant, "quadrant"},
    {FigureKind::barley, "barley"},
    {FigureKind::two_barley_circular, "two-barley"},
    {FigureKind::inscribed_square, "square-in-two-barley"},
    {FigureKind::quadrant_segment, "segment"},
    {FigureKind::equilateral_triangle, "triangle"},
    {FigureKind::three_barley_hexagonal, "three-barley"},
}};

SurdValue half(const SurdValue& v) { return v / Rational(2); }

ApproximationProfile make_coarse() {
  ApproximationProfile p;
  p.name = "coarse";
  p.pi = Rational(3);
  p.roots[2] = parse_absolute("1;24,51,10").to_rational();
  p.roots[3] = parse_absolute("1;45").to_rational();
  p.triangle_coefficient = parse_absolute("0;26,15").to_rational();
  return p;
}

ApproximationProfile make_fine_pi() {
  ApproximationProfile p;
  p.name = "fine-pi";
  p.pi = parse_absolute("3;7,30").to_rational();
  return p;
}

/// a*s + b
struct Linear {
  SurdValue a;
  SurdValue b;
};

/// a*s^2 + b*s + c
struct Quadratic {
  SurdValue a;
  SurdValue b;
  SurdValue c;
};

Quadratic square(const Linear& l) { return {l.a * l.a, SurdValue(2) * l.a * l.b, l.b * l.b}; }
Quadratic operator+(const Quadratic& x, const Quadratic& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }

SideDerivation build_side_derivation() {
  SideDerivation out;
  auto& steps = out.derivation.steps;
  const SurdValue sqrt2 = SurdValue::root(2);
  const SurdValue sqrt3 = SurdValue::root(3);

  const Linear bh{Rational(1, 2), SurdValue(0)};
  const Linear ho_plus_oc{half(sqrt3), half(sqrt2)};
  const SurdValue cb = 1;
  Quadratic lhs = square(bh) + square(ho_plus_oc);
  steps.push_back({"coefficient of s^2 in (s/2)^2 + (sqrt(3)s/2 + sqrt(2)/2)^2", lhs.a});
  steps.push_back({"coefficient of s", lhs.b});
  steps.push_back({"constant term", lhs.c});
  if (!lhs.a.is_rational() || lhs.a.is_zero())
    throw Error(ErrorKind::ContractViolation, "leading coefficient " + lhs.a.str() + " is not a nonzero rational");
  const Rational lead = lhs.a.rational_part();
  out.p = lhs.b / lead;
  out.q = (cb * cb - lhs.c) / lead;
  steps.push_back({"p in s^2 + p s = q", out.p});
  steps.push_back({"q in s^2 + p s = q", out.q});

  QuadraticSolution sol = solve_quadratic(out.p, out.q);
  out.completed_square = sol.completed_square;
  steps.push_back({"p/2", sol.half_p});
  steps.push_back({"(s + p/2)^2", SurdValue(sol.completed_square)});
  steps.push_back({"s + p/2", sol.completed_root});
  steps.push_back({"s", sol.root});
  out.side_squared = sol.root * sol.root;
  steps.push_back({"s^2", out.side_squared});

  const SurdValue& s = sol.root;
  const SurdValue bh_len = half(s);
  const SurdValue ho_oc = half(sqrt3) * s + half(sqrt2);
  if (!(bh_len * bh_len + ho_oc * ho_oc - cb * cb).is_zero())
    throw Error(ErrorKind::ContractViolation, "side " + s.str() + " fails the right-triangle relation");
  out.derivation.result = s;
  return out;
}

const SideDerivation& side_derivation() {
  static const SideDerivation derivation = build_side_derivation();
  return derivation;
}

SurdValue checked_scale_squared(const Figure& f) {
  if (f.scale.sign() <= 0) throw Error(ErrorKind::NonPositive, "figure scale " + f.scale.str() + " is not positive");
  return f.scale * f.scale;
}

Rational triangle_factor(const ApproximationProfile& profile) {
  if (profile.triangle_coefficient) return *profile.triangle_coefficient;
  return profile.root(3) / Rational(4);
}

detail::BigFloat segment_value(const SurdValue& chord, mpfr_prec_t bits) {
  using detail::BigFloat;
  BigFloat c = detail::evaluate_surd(chord, bits);
  // alpha = 2 asin(c/2); area = (alpha - sin alpha) / 2
  BigFloat alpha(bits);
  mpfr_div_ui(alpha.get(), c.get(), 2, MPFR_RNDN);
  mpfr_asin(alpha.get(), alpha.get(), MPFR_RNDN);
  mpfr_mul_ui(alpha.get(), alpha.get(), 2, MPFR_RNDN);
  BigFloat sine(bits);
  mpfr_sin(sine.get(), alpha.get(), MPFR_RNDN);
  BigFloat area = alpha - sine;
  mpfr_div_ui(area.get(), area.get(), 2, MPFR_RNDN);
  return area;
}

detail::BigFloat absolute_error(mpfr_prec_t bits, long slack) {
  detail::BigFloat e(bits);
  mpfr_set_ui(e.get(), 1, MPFR_RNDN);
  mpfr_mul_2si(e.get(), e.get(), -(bits - slack), MPFR_RNDU);
  return e;
}

void check_chord(const SurdValue& chord) {
  if (chord.sign() < 0 || (SurdValue(2) - chord).sign() < 0)
    throw Error(ErrorKind::OutOfRange, "chord " + chord.str() + " is outside [0, 2] on a unit circle");
}

}  // namespace

std::string_view figure_id(FigureKind kind) {
  for (const auto& n : kFigureNames)
    if (n.kind == kind) return n.id;
  return "unknown";
}

FigureKind figure_from_id(std::string_view id) {
  for (const auto& n : kFigureNames)
    if (n.id == id) return n.kind;
  throw Error(ErrorKind::UnknownIdentifier, "unknown figure '" + std::string(id) + "'");
}

const std::vector<FigureKind>& all_figure_kinds() {
  static const std::vector<FigureKind> kinds = [] {
    std::vector<FigureKind> out;
    for (const auto& n : kFigureNames) out.push_back(n.kind);
    return out;
  }();
  return kinds;
}

Figure make_figure(FigureKind kind, SurdValue scale) { return Figure{kind, std::move(scale), false}; }

const ApproximationProfile& profile_coarse() {
  static const ApproximationProfile p = make_coarse();
  return p;
}

const ApproximationProfile& profile_fine_pi() {
  static const ApproximationProfile p = make_fine_pi();
  return p;
}

std::vector<ApproximationProfile> standard_profiles() { return {profile_coarse(), profile_fine_pi()}; }

const ApproximationProfile& profile_from_id(std::string_view id) {
  if (id == "coarse") return profile_coarse();
  if (id == "fine-pi") return profile_fine_pi();
  throw Error(ErrorKind::UnknownIdentifier, "unknown profile '" + std::string(id) + "'");
}

AreaExpr exact_area(const Figure& f) {
  const AreaExpr scale2(checked_scale_squared(f));
  const AreaExpr pi = AreaExpr::pi();
  const SurdValue sqrt3 = SurdValue::root(3);
  AreaExpr unit;
  switch (f.kind) {
    case FigureKind::circle: unit = pi; break;
    case FigureKind::quadrant: unit = pi / Rational(4); break;
    case FigureKind::barley: unit = pi / Rational(2) - 1; break;
    case FigureKind::two_barley_circular: unit = pi / Rational(3) + 1 - AreaExpr(sqrt3); break;
    case FigureKind::inscribed_square: unit = AreaExpr(derive_inscribed_square().result); break;
    case FigureKind::quadrant_segment: unit = pi / Rational(12) - AreaExpr(Rational(1, 4)); break;
    case FigureKind::equilateral_triangle: unit = AreaExpr(sqrt3 / Rational(4)); break;
    case FigureKind::three_barley_hexagonal:
      if (f.with_segments)
        throw Error(ErrorKind::NoClosedForm, "three-barley figure with its arc segments has no pi-linear closed form");
      unit = AreaExpr(SurdValue(6) * sqrt3 / Rational(4) * side_derivation().side_squared);
      break;
  }
  return unit * scale2;
}

BabylonianArea babylonian_area(const Figure& f, const ApproximationProfile& profile, std::size_t places) {
  BabylonianArea out;
  switch (f.kind) {
    case FigureKind::equilateral_triangle:
      out.exact = triangle_factor(profile) * surd_eval(checked_scale_squared(f), profile);
      break;
    case FigureKind::three_barley_hexagonal:
      if (f.with_segments)
        throw Error(ErrorKind::NoClosedForm, "three-barley figure with its arc segments has no pi-linear closed form");
      out.exact = Rational(6) * triangle_factor(profile) * surd_eval(side_derivation().side_squared, profile) *
                  surd_eval(checked_scale_squared(f), profile);
      break;
    default:
      out.exact = area_eval(exact_area(f), profile);
      break;
  }
  out.truncated = from_rational(out.exact, places, Rounding::truncate);
  return out;
}

Sexagesimal circle_coefficient(const ApproximationProfile& profile) {
  const Rational coefficient = (Rational(4) * profile.pi_value()).inverse();
  auto places = finite_places(coefficient);
  if (!places)
    throw Error(ErrorKind::NonRegular, "1/(4 pi) = " + coefficient.str() + " has no finite base-60 expansion");
  return to_sexagesimal(coefficient, *places);
}

CircleFromCircumference circle_area_from_circumference(const Sexagesimal& circumference,
                                                       const ApproximationProfile& profile) {
  if (circumference.negative() || circumference.is_zero())
    throw Error(ErrorKind::NonPositive, "circumference " + circumference.str() + " is not positive");
  CircleFromCircumference out;
  out.coefficient = circle_coefficient(profile);
  out.area = out.coefficient * circumference * circumference;
  return out;
}

Derivation derive_inscribed_square() {
  Derivation out;
  const SurdValue ad = Rational(1, 2);
  const SurdValue bd = SurdValue(1) - half(SurdValue::root(3));
  const SurdValue ad2 = ad * ad;
  const SurdValue bd2 = bd * bd;
  out.result = ad2 + bd2;
  out.steps = {{"AD", ad}, {"BD", bd}, {"AD^2", ad2}, {"BD^2", bd2}, {"AB^2 = AD^2 + BD^2", out.result}};
  if (!(out.result - (SurdValue(2) - SurdValue::root(3))).is_zero())
    throw Error(ErrorKind::ContractViolation, "inscribed square did not reduce to 2 - sqrt(3)");
  return out;
}

SideDerivation derive_three_barley_side() { return side_derivation(); }

std::string segment_area_for_chord(const SurdValue& chord, int places) {
  if (places < 1) throw Error(ErrorKind::ContractViolation, "places must be at least 1");
  check_chord(chord);
  if (chord.is_zero()) return numeric_eval(Rational(0), places);
  for (mpfr_prec_t bits = detail::bits_for_decimal_places(places);; bits *= 2) {
    std::string text = detail::settled_decimal(segment_value(chord, bits), absolute_error(bits, 12), places);
    if (!text.empty()) return text;
  }
}

std::string numeric_segment_area(int places) {
  return segment_area_for_chord(side_derivation().derivation.result, places);
}

ThreeBarleyNumeric numeric_three_barley_total(int places) {
  if (places < 1) throw Error(ErrorKind::ContractViolation, "places must be at least 1");
  const SurdValue& s = side_derivation().derivation.result;
  const SurdValue triangles = SurdValue(6) * SurdValue::root(3) / Rational(4) * side_derivation().side_squared;
  ThreeBarleyNumeric out;
  out.triangles = numeric_eval(triangles, places);
  for (mpfr_prec_t bits = detail::bits_for_decimal_places(places);; bits *= 2) {
    detail::BigFloat six(bits);
    mpfr_set_ui(six.get(), 6, MPFR_RNDN);
    detail::BigFloat segments = segment_value(s, bits) * six;
    detail::BigFloat total = detail::evaluate_surd(triangles, bits) + segments;
    auto error = absolute_error(bits, 16);
    std::string seg_text = detail::settled_decimal(segments, error, places);
    std::string total_text = detail::settled_decimal(total, error, places);
    if (!seg_text.empty() && !total_text.empty()) {
      out.segments = seg_text;
      out.total = total_text;
      return out;
    }
  }
}

BabylonianArea barley_arc_coefficient(const ApproximationProfile& profile, std::size_t places) {
  const Rational half_pi = profile.pi_value() / Rational(2);
  BabylonianArea out;
  out.exact = (half_pi - Rational(1)) / (half_pi * half_pi);
  out.truncated = from_rational(out.exact, places, Rounding::truncate);
  return out;
}

}  // namespace susa
