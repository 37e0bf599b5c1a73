#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "susa/figures.hpp"
#include "susa/sexagesimal.hpp"

namespace susa {

/// What an attested coefficient is reconstructed from.
enum class Target {
  two_barley_area,
  three_barley_area,
  square_diagonal,     // sqrt(2) by the mean/quotient iteration
  circle_coefficient,  // 1 / (4 pi)
};

std::string_view to_string(Target target);

struct CoefficientRecord {
  std::string id;
  FloatingSexagesimal attested;
  /// Interpretive radix placement; kept apart from the attested digits.
  long adopted_exponent = 0;
  Target target = Target::two_barley_area;
  std::string modifier_text;
  std::string notes;
  /// Profile used when the caller does not pick one.
  std::string default_profile;

  Sexagesimal attested_value() const { return place_value(attested, adopted_exponent); }
  std::size_t attested_places() const {
    return adopted_exponent < 0 ? static_cast<std::size_t>(-adopted_exponent) : 0;
  }
};

/// TMS3.5, TMS3.6, YBC7243.10, YBC7243.35.
const std::vector<CoefficientRecord>& builtin_records();
const CoefficientRecord& find_record(std::string_view id);

/// A chosen stand-in for sqrt(21).
struct Sqrt21Substitute {
  std::string label;
  Rational value;
};

/// "a5" (fifth iteration approximant), "back-solved" (the value that
/// reproduces line 6 exactly), or a sexagesimal / p/q literal.
Sqrt21Substitute resolve_sqrt21(std::string_view text);

struct ReconstructionOptions {
  std::optional<std::string> profile;  // record default when empty
  std::optional<Sqrt21Substitute> sqrt21;
  int iteration_steps = 5;
};

enum class Verdict { exact_match, truncation_match, mismatch };
std::string_view to_string(Verdict verdict);

struct VerificationReport {
  std::string id;
  FloatingSexagesimal attested_digits{{1}};
  long adopted_exponent = 0;
  Sexagesimal attested;
  std::string profile;
  std::optional<Sqrt21Substitute> sqrt21;
  Rational reconstruction;
  /// Reconstruction truncated to the attested number of places.
  Approximation reconstruction_truncated;
  std::string reconstruction_decimal;
  std::size_t matching_leading_fractional_digits = 0;
  /// attested - reconstruction, exactly.
  Rational discrepancy;
  Verdict verdict = Verdict::mismatch;
  std::vector<std::string> notes;
};

VerificationReport verify(const CoefficientRecord& record, const ReconstructionOptions& options = {});

/// Line 6 divided by 6, i.e. the area of one of the six triangles.
Sexagesimal sixth_of_line6();

/// Per-triangle value cited for the sqrt(21) = 4;34,57,15,10,28 hypothesis.
Sexagesimal cited_conjecture_triangle();

struct ConjectureReport {
  Rational sqrt21;
  Rational per_triangle;  // 7 (5 - x) / 64
  Rational hexagon;       // (21/32)(5 - x)
  Approximation per_triangle_full;
  Approximation per_triangle_truncated;  // 4 places
  Approximation hexagon_full;
  Approximation hexagon_truncated;       // 4 places
  std::string per_triangle_decimal;
  std::string hexagon_decimal;
  bool hexagon_truncation_matches_attested = false;
  Sexagesimal cited_per_triangle;
  bool agrees_with_cited = false;
  std::size_t digits_agreeing_with_cited = 0;
};

ConjectureReport check_sqrt21_conjecture(const Sexagesimal& sqrt21,
                                         const Sexagesimal& cited = cited_conjecture_triangle());

/// sqrt(21) values a scribe could have used if line 6 is a 4-place
/// truncation: c in [0;16,26,46,40, 0;16,26,46,41).
struct Sqrt21Interval {
  Rational lower;  // exclusive
  Rational upper;  // inclusive
  bool below_true_root = false;
};
Sqrt21Interval implied_sqrt21_interval();

/// Fractional digits shared by a and b from the radix point on; zero when
/// the signs or integer parts differ.
std::size_t matching_fractional_digits(const Rational& a, const Rational& b, std::size_t limit);

}  // namespace susa
