#pragma once

// Check runs and their reports. The structured report is the single source
// of truth; the text rendering is produced from it field by field.

#include <cstdint>
#include <string>

#include "covlift/instance.hpp"
#include "covlift/oracle.hpp"

namespace covlift {

enum class OracleMode { Off, Kernel, LiftSearch, Both };

/// "off" | "kernel" | "liftsearch" | "both"; throws ParseError.
OracleMode parse_oracle_mode(const std::string& text);

struct CheckOptions {
  OracleMode oracle = OracleMode::Off;
  std::int64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

struct CheckOutcome {
  Json report;
  /// Names of automorphisms where an oracle disagreed with the criterion.
  std::vector<std::string> disagreements;
};

CheckOutcome run_check(const Fixture& fixture, const CheckOptions& options = {});

/// Canonical cycle notation of alpha over the graph's labels, fixed points
/// included, cycles led by their first vertex in vertex order.
std::string cycle_notation(const Graph& g, const Automorphism& alpha);

/// Normal form of a standalone matrix, with the Q X T check result.
Json normal_form_report(const ModMatrix& x);

std::string render_check_text(const Json& report);
std::string render_normal_form_text(const Json& report);

Json to_json(const ModMatrix& m);
Json to_json(const IntMatrix& m);

}  // namespace covlift
