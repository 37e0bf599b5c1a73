#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "susa/exact.hpp"
#include "susa/profile.hpp"
#include "susa/sexagesimal.hpp"

namespace susa {

enum class FigureKind {
  circle,
  quadrant,
  barley,
  two_barley_circular,
  inscribed_square,
  quadrant_segment,
  equilateral_triangle,
  three_barley_hexagonal,
};

/// Stable identifiers: circle, quadrant, barley, two-barley,
/// square-in-two-barley, segment, triangle, three-barley.
std::string_view figure_id(FigureKind kind);
FigureKind figure_from_id(std::string_view id);
const std::vector<FigureKind>& all_figure_kinds();

/// A figure at a given linear scale. The scale is the quadrant (or circle)
/// radius, except for equilateral_triangle where it is the side length.
struct Figure {
  FigureKind kind = FigureKind::circle;
  SurdValue scale = SurdValue(1);
  /// Only meaningful for three_barley_hexagonal: include the six arc
  /// segments. That total has no closed form in the pi-linear system.
  bool with_segments = false;
};

Figure make_figure(FigureKind kind, SurdValue scale = SurdValue(1));

/// Profiles addressable as "coarse" and "fine-pi".
const ApproximationProfile& profile_coarse();
const ApproximationProfile& profile_fine_pi();
std::vector<ApproximationProfile> standard_profiles();
const ApproximationProfile& profile_from_id(std::string_view id);

AreaExpr exact_area(const Figure& f);

/// Area the way the tablet computes it: substitute the profile's constants,
/// then truncate to `places`. For triangle-based figures the profile's
/// triangle coefficient replaces sqrt(3)/4 before any root is substituted.
struct BabylonianArea {
  Rational exact;
  Approximation truncated;
};
BabylonianArea babylonian_area(const Figure& f, const ApproximationProfile& profile, std::size_t places);

/// Area of a circle from its circumference: (1 / (4 pi)) c^2.
struct CircleFromCircumference {
  Sexagesimal coefficient;
  Sexagesimal area;
};
Sexagesimal circle_coefficient(const ApproximationProfile& profile);
CircleFromCircumference circle_area_from_circumference(const Sexagesimal& circumference,
                                                       const ApproximationProfile& profile);

struct DerivationStep {
  std::string label;
  SurdValue value;
};

struct Derivation {
  SurdValue result;
  std::vector<DerivationStep> steps;
};

/// AB^2 = AD^2 + BD^2 with AD = 1/2 and BD = 1 - sqrt(3)/2.
Derivation derive_inscribed_square();

/// Side of the hexagon's triangles from (s/2)^2 + (sqrt(3) s/2 + sqrt(2)/2)^2 = 1.
struct SideDerivation {
  Derivation derivation;
  /// Normalised equation s^2 + p s = q.
  SurdValue p;
  SurdValue q;
  Rational completed_square;
  SurdValue side_squared;
};
SideDerivation derive_three_barley_side();

/// Area of the circular segment cut from a unit circle by `chord`.
std::string segment_area_for_chord(const SurdValue& chord, int places);
/// Segment on the side of one hexagon triangle.
std::string numeric_segment_area(int places = 6);

struct ThreeBarleyNumeric {
  std::string triangles;  // 6 (sqrt(3)/4) s^2
  std::string segments;   // 6 segments
  std::string total;
};
ThreeBarleyNumeric numeric_three_barley_total(int places = 6);

/// Barley area normalised by the square of one bounding quadrant arc:
/// (pi/2 - 1) / (pi/2)^2 under the profile.
BabylonianArea barley_arc_coefficient(const ApproximationProfile& profile, std::size_t places = 8);

}  // namespace susa
