#pragma once

// Instance files (JSON): graph, tree choice, group, voltages and named
// automorphisms. The schema is described in README.md.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "covlift/abelian.hpp"
#include "covlift/graph.hpp"
#include "covlift/lifting.hpp"
#include "covlift/voltage.hpp"

namespace covlift {

using Json = nlohmann::ordered_json;

/// Either cycle notation "(0)(13)(67)" or an explicit label -> label mapping.
using AutomorphismSpec = std::variant<std::string, std::vector<LabelPair>>;

struct VoltageEntry {
  /// "u>v"
  LabelPair arc;
  /// One residue per cyclic factor in `group`, in that order.
  std::vector<std::int64_t> residues;

  friend bool operator==(const VoltageEntry&, const VoltageEntry&) = default;
};

struct Instance {
  std::vector<std::string> vertices;
  std::vector<LabelPair> edges;
  std::string base;
  std::optional<std::vector<LabelPair>> tree;
  std::optional<std::vector<LabelPair>> cotree_arcs;
  std::vector<std::int64_t> group;
  std::vector<VoltageEntry> voltages;
  std::vector<std::pair<std::string, AutomorphismSpec>> automorphisms;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ParseError with a path to the offending field.
Instance parse_instance(const Json& doc);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
Json to_json(const Instance& instance);

/// "(0)(13)(67)" -> mapping. Inside a cycle, labels are separated by
/// whitespace or commas when any are present, otherwise each character is
/// one label. Throws ParseError.
std::vector<LabelPair> parse_cycle_notation(const std::string& text);

/// Everything validated and derived from an instance.
struct Fixture {
  Graph graph;
  CycleBasis basis;
  GroupPresentation group;
  /// As given (before any tree reduction).
  VoltageAssignment input_voltages;
  /// T-reduced; equal to input_voltages when those already were.
  VoltageAssignment voltages;
  bool gauge_reduced = false;
  VoltageMatrices matrices;
  std::vector<NormalFormResult> normal_forms;
  std::vector<NamedAutomorphism> automorphisms;
};

/// Throws covlift::Error from whichever module rejects the input.
Fixture build_fixture(const Instance& instance);

}  // namespace covlift
