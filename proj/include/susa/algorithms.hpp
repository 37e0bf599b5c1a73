#pragma once

#include <optional>
#include <string>
#include <vector>

#include "susa/exact.hpp"
#include "susa/rational.hpp"
#include "susa/sexagesimal.hpp"

namespace susa {

enum class StepKind { mean, quotient };
enum class RootSide { below_root, above_root };

std::string_view to_string(StepKind kind);
std::string_view to_string(RootSide side);

struct IterationStep {
  int k = 0;
  StepKind kind = StepKind::mean;
  /// Value computed from the (possibly truncated) previous steps.
  Rational exact;
  /// Value carried forward; equals `exact` unless the trace truncates.
  Rational value;
  RootSide side = RootSide::below_root;
};

/// Alternating mean/quotient approximants to sqrt(target).
struct IterationTrace {
  Rational target;
  std::optional<std::size_t> truncation_places;
  std::vector<IterationStep> steps;

  const Rational& last() const { return steps.back().value; }
};

/// Floor of the real square root of a nonnegative rational.
BigInt floor_sqrt(const Rational& r);

/// a1 = (floor + ceil)/2 of the root, then a_{2k} = N / a_{2k-1} and
/// a_{2k+1} = (a_{2k-1} + a_{2k}) / 2, all in exact rationals.
IterationTrace babylonian_sqrt(const Rational& target, int step_count);

/// Same schedule, but every step is truncated to `places` sexagesimal
/// fractional places before it is used again.
IterationTrace truncated_iteration(const Rational& target, int step_count, std::size_t places);

/// Positive root of x^2 + p*x = q by completing the square.
struct QuadraticSolution {
  SurdValue p;
  SurdValue q;
  /// p / 2, the amount added to x inside the square.
  SurdValue half_p;
  /// q + (p/2)^2, required to be rational.
  Rational completed_square;
  /// sqrt(completed_square).
  SurdValue completed_root;
  SurdValue root;
};

QuadraticSolution solve_quadratic(const SurdValue& p, const SurdValue& q);

/// Area of the six-triangle hexagon, 6 * (7/16) * (5 - x) / 4, for a
/// substitute x of sqrt(21).
Rational hexagon_area_for_sqrt21(const Rational& x);
/// Inverse of hexagon_area_for_sqrt21: x = 5 - (32/21) c, for 0 < c < 105/32.
Rational back_solve_sqrt21(const Rational& coefficient);

}  // namespace susa
