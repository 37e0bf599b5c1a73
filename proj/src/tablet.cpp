#include "susa/tablet.hpp"

#include "susa/algorithms.hpp"
#include "susa/error.hpp"

namespace susa {

namespace {

constexpr std::size_t kExpansionPlaces = 12;

std::vector<CoefficientRecord> make_records() {
  std::vector<CoefficientRecord> out;
  out.push_back({"TMS3.5", FloatingSexagesimal({16}), -1, Target::two_barley_area,
                 "šà gúr šà 2 še i-na šà gúr gar",
                 "Circular figure of two overlapping barley figures. Attested 16 is marked sic; "
                 "the reconstruction gives 15 (hypothesis flag, not a correction).",
                 "coarse"});
  out.push_back({"TMS3.6", FloatingSexagesimal({16, 26, 46, 40}), -4, Target::three_barley_area,
                 "šà gúr šà 3 še i-na šà gúr gar",
                 "Hexagon-like figure of six equilateral triangles; the six small arc segments are "
                 "omitted in the reconstruction. Depends on the chosen sqrt(21) substitute.",
                 "coarse"});
  out.push_back({"YBC7243.10", FloatingSexagesimal({1, 24, 51, 10}), -3, Target::square_diagonal,
                 "ši-li-ip-tum íb-si₈", "Diagonal of a square, sqrt(2).", "coarse"});
  out.push_back({"YBC7243.35", FloatingSexagesimal({4, 48}), -2, Target::circle_coefficient,
                 "ku-bu-ur i-ši-im", "Thickness of a log, 1/(4 pi).", "fine-pi"});
  return out;
}

Approximation full_expansion(const Rational& r) {
  auto places = finite_places(r);
  if (places && *places <= kExpansionPlaces) return {to_sexagesimal(r, *places), true};
  return from_rational(r, kExpansionPlaces, Rounding::truncate);
}

}  // namespace

std::string_view to_string(Target target) {
  switch (target) {
    case Target::two_barley_area: return "two-barley";
    case Target::three_barley_area: return "three-barley";
    case Target::square_diagonal: return "sqrt2-diagonal";
    case Target::circle_coefficient: return "circle-coefficient";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::exact_match: return "exact_match";
    case Verdict::truncation_match: return "truncation_match";
    case Verdict::mismatch: return "mismatch";
  }
  return "unknown";
}

const std::vector<CoefficientRecord>& builtin_records() {
  static const std::vector<CoefficientRecord> records = make_records();
  return records;
}

const CoefficientRecord& find_record(std::string_view id) {
  for (const auto& r : builtin_records())
    if (r.id == id) return r;
  throw Error(ErrorKind::UnknownIdentifier, "unknown record '" + std::string(id) + "'");
}

Sqrt21Substitute resolve_sqrt21(std::string_view text) {
  if (text == "a5") return {"a5", babylonian_sqrt(Rational(21), 5).last()};
  if (text == "back-solved") {
    const auto& line6 = find_record("TMS3.6");
    return {"back-solved", back_solve_sqrt21(line6.attested_value().to_rational())};
  }
  if (text.find(';') != std::string_view::npos) {
    Sexagesimal x = parse_absolute(text);
    return {x.str(), x.to_rational()};
  }
  Rational x = Rational::parse(text);
  return {x.str(), x};
}

std::size_t matching_fractional_digits(const Rational& a, const Rational& b, std::size_t limit) {
  if (a.sign() * b.sign() < 0) return 0;
  auto [ai, af] = expand_digits(a, limit);
  auto [bi, bf] = expand_digits(b, limit);
  if (ai != bi) return 0;
  std::size_t n = 0;
  while (n < limit && af[n] == bf[n]) ++n;
  return n;
}

VerificationReport verify(const CoefficientRecord& record, const ReconstructionOptions& options) {
  VerificationReport out;
  out.id = record.id;
  out.attested_digits = record.attested;
  out.adopted_exponent = record.adopted_exponent;
  out.attested = record.attested_value();
  const std::size_t places = record.attested_places();
  const ApproximationProfile& base = profile_from_id(options.profile.value_or(record.default_profile));
  out.profile = base.name;
  out.notes.push_back(record.notes);

  switch (record.target) {
    case Target::two_barley_area:
      out.reconstruction =
          babylonian_area(make_figure(FigureKind::two_barley_circular), base, places).exact;
      out.notes.emplace_back("Normalisation assumed: unit quadrant radius (not stated on the tablet).");
      break;
    case Target::three_barley_area: {
      ApproximationProfile profile = base;
      if (options.sqrt21) {
        out.sqrt21 = options.sqrt21;
        profile = base.with_root(21, options.sqrt21->value);
      }
      out.reconstruction =
          babylonian_area(make_figure(FigureKind::three_barley_hexagonal), profile, places).exact;
      out.notes.emplace_back("Normalisation assumed: unit quadrant radius (not stated on the tablet).");
      if (out.sqrt21) out.notes.push_back("sqrt(21) substitute: " + out.sqrt21->label + " = " + out.sqrt21->value.str());
      break;
    }
    case Target::square_diagonal:
      out.reconstruction = babylonian_sqrt(Rational(2), options.iteration_steps).last();
      out.notes.push_back("Reconstructed by " + std::to_string(options.iteration_steps) +
                          " mean/quotient steps from 1;30.");
      break;
    case Target::circle_coefficient:
      out.reconstruction = (Rational(4) * base.pi_value()).inverse();
      break;
  }

  out.reconstruction_truncated = from_rational(out.reconstruction, places, Rounding::truncate);
  out.reconstruction_decimal = numeric_eval(out.reconstruction, 9);
  const Rational attested = out.attested.to_rational();
  out.discrepancy = attested - out.reconstruction;
  out.matching_leading_fractional_digits = matching_fractional_digits(out.reconstruction, attested, places);
  if (out.reconstruction == attested)
    out.verdict = Verdict::exact_match;
  else if (out.reconstruction_truncated.value == out.attested)
    out.verdict = Verdict::truncation_match;
  else
    out.verdict = Verdict::mismatch;

  if (record.target == Target::two_barley_area && out.verdict == Verdict::mismatch &&
      out.discrepancy == pow60(-1)) {
    out.notes.emplace_back("Hypothesis: attested 16 may be a slip for 15; the stored digit stays 16.");
  }
  return out;
}

Sexagesimal sixth_of_line6() {
  const Sexagesimal line6 = find_record("TMS3.6").attested_value();
  Sexagesimal sixth = line6 * reciprocal(Sexagesimal::from_integer(6));
  if (sixth.places() > 5) throw Error(ErrorKind::ContractViolation, "line 6 / 6 is not exact at 5 places");
  return sixth;
}

Sexagesimal cited_conjecture_triangle() { return parse_absolute("0;2,44,27,46,40,1,25"); }

ConjectureReport check_sqrt21_conjecture(const Sexagesimal& sqrt21, const Sexagesimal& cited) {
  const Rational x = sqrt21.to_rational();
  if (x.sign() <= 0) throw Error(ErrorKind::NonPositive, "sqrt(21) substitute " + sqrt21.str() + " is not positive");
  if (x >= Rational(5))
    throw Error(ErrorKind::OutOfRange, "sqrt(21) substitute " + sqrt21.str() + " makes the area nonpositive");
  ConjectureReport out;
  out.sqrt21 = x;
  out.per_triangle = Rational(7) * (Rational(5) - x) / Rational(64);
  out.hexagon = hexagon_area_for_sqrt21(x);
  out.per_triangle_full = full_expansion(out.per_triangle);
  out.per_triangle_truncated = from_rational(out.per_triangle, 4, Rounding::truncate);
  out.hexagon_full = full_expansion(out.hexagon);
  out.hexagon_truncated = from_rational(out.hexagon, 4, Rounding::truncate);
  out.per_triangle_decimal = numeric_eval(out.per_triangle, 9);
  out.hexagon_decimal = numeric_eval(out.hexagon, 9);
  out.hexagon_truncation_matches_attested = out.hexagon_truncated.value == find_record("TMS3.6").attested_value();
  out.cited_per_triangle = cited;
  out.agrees_with_cited = out.per_triangle == cited.to_rational();
  out.digits_agreeing_with_cited =
      matching_fractional_digits(out.per_triangle, cited.to_rational(), kExpansionPlaces);
  return out;
}

Sqrt21Interval implied_sqrt21_interval() {
  const Rational low_c = find_record("TMS3.6").attested_value().to_rational();
  const Rational high_c = low_c + pow60(-4);
  Sqrt21Interval out;
  out.upper = back_solve_sqrt21(low_c);
  out.lower = back_solve_sqrt21(high_c);
  out.below_true_root = out.upper.sign() > 0 && out.upper * out.upper < Rational(21);
  if (!out.below_true_root)
    throw Error(ErrorKind::ContractViolation, "implied sqrt(21) interval reaches the true root");
  return out;
}

}  // namespace susa
