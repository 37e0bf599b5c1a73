#pragma once

#include "json.hpp"

#include <string>

#include "susa/algorithms.hpp"
#include "susa/figures.hpp"
#include "susa/tablet.hpp"

namespace susa {

using Json = nlohmann::ordered_json;

/// Numeral text; inexact truncations get a trailing ",…".
std::string display(const Approximation& a);

Json to_json(const IterationTrace& trace, std::size_t display_places = 4);
Json to_json(const VerificationReport& report);
Json to_json(const ConjectureReport& report);
Json to_json(const Sqrt21Interval& interval);
Json to_json(const Derivation& derivation);
Json to_json(const QuadraticSolution& solution);
Json to_json(const ApproximationProfile& profile);

std::string to_text(const IterationTrace& trace, std::size_t display_places = 4);
std::string to_text(const VerificationReport& report);
std::string to_text(const ConjectureReport& report);
std::string to_text(const Derivation& derivation);

enum class ReportFormat { text, json };

/// Every builtin verification, the sqrt(2) and sqrt(21) traces, the line 6
/// analysis and the figure derivations, as one deterministic document.
std::string emit_report(ReportFormat format);

}  // namespace susa
