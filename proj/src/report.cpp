#include "susa/report.hpp"

#include <sstream>

namespace susa {

namespace {

constexpr int kDecimalPlaces = 9;

Json rational_json(const Rational& r) {
  Json j;
  j["rational"] = r.str();
  auto full = from_rational(r, 12, Rounding::truncate);
  if (auto places = finite_places(r); places && *places <= 12) full = {to_sexagesimal(r, *places), true};
  j["sexagesimal"] = full.value.str();
  j["sexagesimal_exact"] = full.exact;
  j["decimal"] = numeric_eval(r, kDecimalPlaces);
  return j;
}

std::string full_display(const Rational& r) {
  if (auto places = finite_places(r); places && *places <= 12) return to_sexagesimal(r, *places).str();
  return display(from_rational(r, 12, Rounding::truncate));
}

}  // namespace

std::string display(const Approximation& a) { return a.exact ? a.value.str() : a.value.str() + ",…"; }

Json to_json(const IterationTrace& trace, std::size_t display_places) {
  Json j;
  j["N"] = trace.target.str();
  j["truncation_places"] = trace.truncation_places ? Json(*trace.truncation_places) : Json(nullptr);
  j["display_places"] = display_places;
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["k"] = s.k;
    step["kind"] = std::string(to_string(s.kind));
    step["exact"] = s.exact.str();
    auto shown = from_rational(s.exact, display_places, Rounding::truncate);
    step["sexagesimal"] = shown.value.str();
    step["sexagesimal_exact"] = shown.exact;
    if (trace.truncation_places) step["carried"] = from_rational(s.value, *trace.truncation_places).value.str();
    step["side"] = std::string(to_string(s.side));
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["id"] = r.id;
  j["attested_digits"] = r.attested_digits.str();
  j["adopted_exponent"] = r.adopted_exponent;
  j["attested"] = r.attested.str();
  j["profile"] = r.profile;
  if (r.sqrt21)
    j["sqrt21"] = Json{{"label", r.sqrt21->label}, {"rational", r.sqrt21->value.str()}};
  else
    j["sqrt21"] = nullptr;
  Json recon = rational_json(r.reconstruction);
  recon["truncated"] = r.reconstruction_truncated.value.str();
  j["reconstruction"] = std::move(recon);
  j["matching_leading_fractional_digits"] = r.matching_leading_fractional_digits;
  j["verdict"] = std::string(to_string(r.verdict));
  j["discrepancy"] = rational_json(r.discrepancy);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ConjectureReport& r) {
  Json j;
  j["sqrt21"] = rational_json(r.sqrt21);
  Json tri = rational_json(r.per_triangle);
  tri["truncated_4"] = display(r.per_triangle_truncated);
  j["per_triangle"] = std::move(tri);
  Json hex = rational_json(r.hexagon);
  hex["truncated_4"] = display(r.hexagon_truncated);
  j["hexagon"] = std::move(hex);
  j["hexagon_truncation_matches_attested"] = r.hexagon_truncation_matches_attested;
  j["cited_per_triangle"] = r.cited_per_triangle.str();
  j["agrees_with_cited"] = r.agrees_with_cited;
  j["digits_agreeing_with_cited"] = r.digits_agreeing_with_cited;
  return j;
}

Json to_json(const Sqrt21Interval& interval) {
  Json j;
  j["lower_exclusive"] = rational_json(interval.lower);
  j["upper_inclusive"] = rational_json(interval.upper);
  j["width"] = (interval.upper - interval.lower).str();
  j["below_true_root"] = interval.below_true_root;
  return j;
}

Json to_json(const Derivation& d) {
  Json j;
  j["result"] = d.result.str();
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(Json{{"label", s.label}, {"value", s.value.str()}});
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const QuadraticSolution& s) {
  Json j;
  j["p"] = s.p.str();
  j["q"] = s.q.str();
  j["half_p"] = s.half_p.str();
  j["completed_square"] = s.completed_square.str();
  j["completed_root"] = s.completed_root.str();
  j["root"] = s.root.str();
  j["root_decimal"] = numeric_eval(s.root, kDecimalPlaces);
  return j;
}

Json to_json(const ApproximationProfile& p) {
  Json j;
  j["name"] = p.name;
  j["pi"] = p.pi ? Json(full_display(*p.pi)) : Json(nullptr);
  Json roots = Json::object();
  for (const auto& [d, v] : p.roots) roots["sqrt(" + std::to_string(d) + ")"] = full_display(v);
  j["roots"] = std::move(roots);
  j["triangle_coefficient"] = p.triangle_coefficient ? Json(full_display(*p.triangle_coefficient)) : Json(nullptr);
  return j;
}

std::string to_text(const IterationTrace& trace, std::size_t display_places) {
  std::ostringstream os;
  os << "sqrt(" << trace.target.str() << ")";
  if (trace.truncation_places) os << ", carried to " << *trace.truncation_places << " places";
  os << '\n';
  for (const auto& s : trace.steps) {
    os << "  a" << s.k << "  " << to_string(s.kind) << "  " << s.exact.str() << "  "
       << display(from_rational(s.exact, display_places, Rounding::truncate));
    if (trace.truncation_places)
      os << "  carried " << from_rational(s.value, *trace.truncation_places).value.str();
    os << "  " << to_string(s.side) << '\n';
  }
  return os.str();
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.id << "  attested " << r.attested_digits.str() << " (exponent " << r.adopted_exponent << ") = "
     << r.attested.str() << '\n';
  os << "  profile " << r.profile;
  if (r.sqrt21) os << ", sqrt(21) = " << r.sqrt21->label;
  os << '\n';
  os << "  reconstruction " << full_display(r.reconstruction) << " = " << r.reconstruction.str() << " ~ "
     << r.reconstruction_decimal << '\n';
  os << "  truncated " << r.reconstruction_truncated.value.str() << ", matching fractional digits "
     << r.matching_leading_fractional_digits << '\n';
  os << "  discrepancy (attested - reconstruction) " << full_display(r.discrepancy) << " = " << r.discrepancy.str()
     << '\n';
  os << "  verdict " << to_string(r.verdict) << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  return os.str();
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << "sqrt(21) substitute " << full_display(r.sqrt21) << " = " << r.sqrt21.str() << '\n';
  os << "  per triangle 7(5 - x)/64 = " << r.per_triangle.str() << " = " << display(r.per_triangle_full) << " ~ "
     << r.per_triangle_decimal << '\n';
  os << "  per triangle truncated to 4 places " << display(r.per_triangle_truncated) << '\n';
  os << "  hexagon (21/32)(5 - x) = " << r.hexagon.str() << " = " << display(r.hexagon_full) << " ~ "
     << r.hexagon_decimal << '\n';
  os << "  hexagon truncated to 4 places " << display(r.hexagon_truncated)
     << (r.hexagon_truncation_matches_attested ? " (matches line 6)" : " (differs from line 6)") << '\n';
  os << "  cited per-triangle value " << r.cited_per_triangle.str() << ": "
     << (r.agrees_with_cited ? "agrees" : "disagrees") << " (" << r.digits_agreeing_with_cited
     << " fractional digits agree)\n";
  return os.str();
}

std::string to_text(const Derivation& d) {
  std::ostringstream os;
  for (const auto& s : d.steps) os << "  " << s.label << " = " << s.value.str() << '\n';
  os << "  result " << d.result.str() << '\n';
  return os.str();
}

std::string emit_report(ReportFormat format) {
  ReconstructionOptions line6_options;
  line6_options.sqrt21 = resolve_sqrt21("a5");
  std::vector<VerificationReport> reports;
  for (const auto& record : builtin_records())
    reports.push_back(verify(record, record.target == Target::three_barley_area ? line6_options : ReconstructionOptions{}));

  const IterationTrace sqrt2 = babylonian_sqrt(Rational(2), 5);
  const IterationTrace sqrt21 = babylonian_sqrt(Rational(21), 5);
  const Sexagesimal sixth = sixth_of_line6();
  const ConjectureReport conjecture = check_sqrt21_conjecture(parse_absolute("4;34,57,15,10,28"));
  const Sqrt21Interval interval = implied_sqrt21_interval();
  const Derivation square = derive_inscribed_square();
  const SideDerivation side = derive_three_barley_side();
  const SurdValue triangle = SurdValue(7) / Rational(16) * side.side_squared;
  const std::string triangle_decimal = numeric_eval(triangle, 6);
  const std::string segment = numeric_segment_area(6);
  const ThreeBarleyNumeric three = numeric_three_barley_total(6);
  const std::string sixth_decimal = numeric_eval(sixth.to_rational(), 6);
  const auto two_barley = babylonian_area(make_figure(FigureKind::two_barley_circular), profile_coarse(), 4);
  const auto log_coefficient = circle_coefficient(profile_fine_pi());
  const auto pi_from_log = reciprocal(log_coefficient) * reciprocal(Sexagesimal::from_integer(4));

  if (format == ReportFormat::json) {
    Json j;
    Json profiles = Json::array();
    for (const auto& p : standard_profiles()) profiles.push_back(to_json(p));
    j["profiles"] = std::move(profiles);
    Json records = Json::object();
    for (const auto& r : reports) records[r.id] = to_json(r);
    j["records"] = std::move(records);
    j["iterations"] = Json{{"sqrt2", to_json(sqrt2)}, {"sqrt21", to_json(sqrt21)}};
    Json line5;
    line5["two_barley_coarse"] = display(two_barley.truncated);
    line5["inscribed_square"] = to_json(square);
    line5["inscribed_square_decimal"] = numeric_eval(square.result, 6);
    j["line5"] = std::move(line5);
    Json line6;
    line6["sixth"] = sixth.str();
    line6["sixth_decimal"] = sixth_decimal;
    line6["side"] = to_json(side.derivation);
    line6["completed_square"] = side.completed_square.str();
    line6["triangle_7_16_decimal"] = triangle_decimal;
    line6["segment_decimal"] = segment;
    line6["three_barley_numeric"] =
        Json{{"triangles", three.triangles}, {"segments", three.segments}, {"total", three.total}};
    line6["conjecture"] = to_json(conjecture);
    line6["implied_sqrt21_interval"] = to_json(interval);
    j["line6"] = std::move(line6);
    j["log_thickness"] = Json{{"coefficient_fine_pi", log_coefficient.str()}, {"pi", pi_from_log.str()}};
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "== Profiles\n";
  for (const auto& p : standard_profiles()) os << "  " << to_json(p).dump() << '\n';
  os << "\n== Verification\n";
  for (const auto& r : reports) os << to_text(r);
  os << "\n== Iterations\n" << to_text(sqrt2) << to_text(sqrt21);
  os << "\n== Line 5: two-barley figure\n";
  os << "  coefficient under coarse " << display(two_barley.truncated) << '\n';
  os << to_text(square);
  os << "  2 - sqrt(3) ~ " << numeric_eval(square.result, 6) << '\n';
  os << "\n== Line 6: three-barley figure\n";
  os << to_text(side.derivation);
  os << "  line 6 / 6 = " << sixth.str() << " ~ " << sixth_decimal << '\n';
  os << "  (7/16) s^2 = 7(5 - sqrt(21))/64 ~ " << triangle_decimal << '\n';
  os << "  one arc segment ~ " << segment << '\n';
  os << "  six triangles " << three.triangles << " + six segments " << three.segments << " = " << three.total
     << '\n';
  os << to_text(conjecture);
  os << "  implied sqrt(21) interval (" << interval.lower.str() << ", " << interval.upper.str() << "] ~ ("
     << numeric_eval(interval.lower, kDecimalPlaces) << ", " << numeric_eval(interval.upper, kDecimalPlaces)
     << "], below true root: " << (interval.below_true_root ? "yes" : "no") << '\n';
  os << "\n== Log thickness\n";
  os << "  1/(4 pi) under fine-pi " << log_coefficient.str() << ", pi = " << pi_from_log.str() << '\n';
  return os.str();
}

}  // namespace susa
