#include "susa/algorithms.hpp"

#include "susa/error.hpp"

namespace susa {

std::string_view to_string(StepKind kind) { return kind == StepKind::mean ? "mean" : "quotient"; }
std::string_view to_string(RootSide side) { return side == RootSide::below_root ? "below" : "above"; }

BigInt floor_sqrt(const Rational& r) {
  if (r.sign() < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt(" + r.str() + ")");
  // floor(sqrt(x)) == floor(sqrt(floor(x))) for real x >= 0
  BigInt out;
  BigInt f = r.floor();
  mpz_sqrt(out.get_mpz_t(), f.get_mpz_t());
  return out;
}

namespace {

IterationTrace iterate(const Rational& target, int step_count, std::optional<std::size_t> places) {
  if (target.sign() <= 0) throw Error(ErrorKind::NonPositive, "radicand " + target.str() + " is not positive");
  if (target <= Rational(1))
    throw Error(ErrorKind::OutOfRange, "radicand " + target.str() + " must exceed 1");
  if (step_count < 1) throw Error(ErrorKind::OutOfRange, "step_count must be at least 1");
  Rational root;
  if (exact_rational_sqrt(target, root))
    throw Error(ErrorKind::PerfectSquare, target.str() + " is the square of " + root.str());

  auto carry = [&](const Rational& v) {
    return places ? from_rational(v, *places, Rounding::truncate).value.to_rational() : v;
  };
  auto side_of = [&](const Rational& v) {
    return v * v < target ? RootSide::below_root : RootSide::above_root;
  };

  IterationTrace trace;
  trace.target = target;
  trace.truncation_places = places;
  const BigInt below = floor_sqrt(target);
  const Rational seed = (Rational(below) + Rational(BigInt(below + 1))) / Rational(2);
  trace.steps.push_back({1, StepKind::mean, seed, carry(seed), side_of(carry(seed))});
  for (int k = 2; k <= step_count; ++k) {
    const auto& prev = trace.steps[static_cast<std::size_t>(k - 2)];
    IterationStep step;
    step.k = k;
    if (k % 2 == 0) {
      step.kind = StepKind::quotient;
      step.exact = target / prev.value;
    } else {
      const auto& before = trace.steps[static_cast<std::size_t>(k - 3)];
      step.kind = StepKind::mean;
      step.exact = (before.value + prev.value) / Rational(2);
    }
    step.value = carry(step.exact);
    step.side = side_of(step.value);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace

IterationTrace babylonian_sqrt(const Rational& target, int step_count) {
  return iterate(target, step_count, std::nullopt);
}

IterationTrace truncated_iteration(const Rational& target, int step_count, std::size_t places) {
  if (places < 1) throw Error(ErrorKind::OutOfRange, "places must be at least 1");
  return iterate(target, step_count, places);
}

QuadraticSolution solve_quadratic(const SurdValue& p, const SurdValue& q) {
  QuadraticSolution out;
  out.p = p;
  out.q = q;
  out.half_p = p / Rational(2);
  SurdValue completed = q + out.half_p * out.half_p;
  if (!completed.is_rational())
    throw Error(ErrorKind::IrrationalCompletedSquare,
                "q + (p/2)^2 = " + completed.str() + " is not rational");
  out.completed_square = completed.rational_part();
  if (out.completed_square.sign() < 0)
    throw Error(ErrorKind::NegativeDiscriminant, "q + (p/2)^2 = " + out.completed_square.str());
  out.completed_root = surd_sqrt(out.completed_square);
  out.root = out.completed_root - out.half_p;
  if (out.root.sign() <= 0)
    throw Error(ErrorKind::NoPositiveRoot, "x^2 + (" + p.str() + ")x = " + q.str() + " has no positive root");
  if (!(out.root * out.root + p * out.root - q).is_zero())
    throw Error(ErrorKind::ContractViolation, "root " + out.root.str() + " failed substitution check");
  return out;
}

Rational hexagon_area_for_sqrt21(const Rational& x) {
  return Rational(21) / Rational(32) * (Rational(5) - x);
}

Rational back_solve_sqrt21(const Rational& coefficient) {
  const Rational upper = Rational(105) / Rational(32);
  if (coefficient.sign() <= 0 || coefficient >= upper)
    throw Error(ErrorKind::OutOfRange, "coefficient " + coefficient.str() + " is outside (0, 105/32)");
  return Rational(5) - Rational(32) / Rational(21) * coefficient;
}

}  // namespace susa
