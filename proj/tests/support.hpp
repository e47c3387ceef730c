#pragma once

// Shared fixtures and random generators for the test suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "covlift/abelian.hpp"
#include "covlift/generator.hpp"
#include "covlift/graph.hpp"
#include "covlift/instance.hpp"
#include "covlift/lifting.hpp"
#include "covlift/voltage.hpp"
#include "covlift/zn_matrix.hpp"

namespace covlift::testing {

inline std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Vertices 0..9 are the 2-subsets ab, cd, ce, de, ae, be, ad, bd, ac, bc;
/// edges join disjoint subsets.
inline Graph petersen() {
  const std::vector<std::string> subsets = {"ab", "cd", "ce", "de", "ae", "be", "ad", "bd", "ac", "bc"};
  std::vector<LabelPair> edges;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = i + 1; j < 10; ++j) {
      bool disjoint = subsets[i].find(subsets[j][0]) == std::string::npos &&
                      subsets[i].find(subsets[j][1]) == std::string::npos;
      if (disjoint) edges.emplace_back(std::to_string(i), std::to_string(j));
    }
  return validate_graph(labels(10), edges);
}

inline std::vector<Arc> petersen_cotree(const Graph& g) {
  const std::vector<std::pair<const char*, const char*>> h = {{"5", "8"}, {"7", "8"}, {"4", "7"},
                                                              {"4", "9"}, {"6", "9"}, {"5", "6"}};
  std::vector<Arc> arcs;
  for (const auto& [a, b] : h) arcs.push_back({g.vertex(a), g.vertex(b)});
  return arcs;
}

inline CycleBasis petersen_basis(const Graph& g) {
  TreeOptions options;
  options.cotree_arcs = petersen_cotree(g);
  return build_spanning_tree(g, g.vertex("0"), options);
}

inline Automorphism from_cycles(const Graph& g, const std::string& cycles) {
  return check_automorphism(g, parse_cycle_notation(cycles));
}

inline const std::vector<std::string>& petersen_alpha_cycles() {
  static const std::vector<std::string> cycles = {"(0)(2)(13)(67)(49)(58)", "(4)(7)(19)(56)(28)(03)",
                                                  "(0)(123)(468)(579)", "(0)(1)(2)(3)(45)(67)(89)"};
  return cycles;
}

inline IntMatrix petersen_s(std::size_t which) {
  static const std::vector<IntMatrix> s = {
      {{-1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, -1, 0},
       {0, 0, 0, -1, 0, 0}, {0, 0, -1, 0, 0, 0}, {0, -1, 0, 0, 0, 0}},
      {{0, 0, 0, 0, -1, 0}, {0, -1, 0, 0, 0, 0}, {0, 1, 1, -1, 0, 0},
       {0, 0, 0, -1, 0, 0}, {-1, 0, 0, 0, 0, 0}, {1, 0, 0, 0, -1, -1}},
      {{0, 0, -1, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 1, 0},
       {0, 0, 0, 0, 0, -1}, {-1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}},
      {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},
       {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}},
  };
  return s.at(which);
}

inline const std::vector<std::vector<std::int64_t>>& petersen_theta() {
  static const std::vector<std::vector<std::int64_t>> theta = {{1, 1, 1}, {1, 0, 2}, {1, 1, 2},
                                                               {1, 0, 3}, {1, 1, 0}, {1, 0, 0}};
  return theta;
}

/// Petersen graph, basis, Z/2 x Z/2 x Z/4 and the T-reduced voltages.
struct PetersenFixture {
  Graph graph = petersen();
  CycleBasis basis = petersen_basis(graph);
  GroupPresentation group = parse_group_spec(std::vector<std::int64_t>{2, 2, 4});
  VoltageAssignment voltages = make_voltages();
  VoltageMatrices matrices = build_voltage_matrices(basis, voltages);

  VoltageAssignment make_voltages() const {
    std::vector<std::pair<Arc, GroupElement>> raw;
    const auto arcs = petersen_cotree(graph);
    for (std::size_t i = 0; i < arcs.size(); ++i) raw.emplace_back(arcs[i], group.from_factors(petersen_theta()[i]));
    return validate_voltage(graph, basis, group.spec(), raw);
  }
  Automorphism alpha(std::size_t which) const { return from_cycles(graph, petersen_alpha_cycles().at(which)); }
};

inline ModMatrix petersen_b() {
  return ModMatrix(PrimePower(2, 2), {{2, 2, 1}, {2, 0, 2}, {2, 2, 2}, {2, 0, 3}, {2, 2, 0}, {2, 0, 0}});
}

// --- random generators ------------------------------------------------------

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Connected graph on n vertices: random tree plus extra edges.
inline Graph random_connected_graph(Rng& rng, std::size_t n, int extra_percent) {
  std::vector<LabelPair> edges;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t v = 1; v < n; ++v) {
    std::size_t u = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(v) - 1));
    adj[u][v] = adj[v][u] = true;
    edges.emplace_back(std::to_string(u), std::to_string(v));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!adj[a][b] && uniform(rng, 0, 99) < extra_percent) edges.emplace_back(std::to_string(a), std::to_string(b));
  return validate_graph(labels(n), edges);
}

/// Random walk of `steps` arcs from `start`, closed by the tree path back.
inline Walk random_closed_walk(Rng& rng, const Graph& g, const CycleBasis& cb, Vertex start, std::size_t steps) {
  std::vector<Arc> arcs;
  Vertex at = start;
  for (std::size_t i = 0; i < steps; ++i) {
    auto nbrs = g.neighbors(at);
    if (nbrs.empty()) break;
    Vertex next = nbrs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(nbrs.size()) - 1))];
    arcs.push_back({at, next});
    at = next;
  }
  return Walk(start, std::move(arcs)).concat(cb.tree_path(at, start));
}

inline GroupElement random_element(Rng& rng, const AbelianGroupSpec& spec) {
  return spec.element_at(uniform(rng, 0, spec.order() - 1));
}

inline ModMatrix random_mod_matrix(Rng& rng, const PrimePower& ring, std::size_t m, std::size_t n) {
  ModMatrix x(ring, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) x.set(i, j, uniform(rng, 0, ring.modulus() - 1));
  return x;
}

/// Product of random elementary operations: invertible by construction.
inline ModMatrix random_invertible(Rng& rng, const PrimePower& ring, std::size_t n) {
  ModMatrix u = ModMatrix::identity(ring, n);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0: u.swap_rows(a, b); break;
      case 1: {
        Residue unit = 0;
        while (!is_unit(unit, ring)) unit = uniform(rng, 1, ring.modulus() - 1);
        u.scale_row(a, unit);
        break;
      }
      default:
        if (a != b) u.add_row_multiple(a, b, uniform(rng, 0, ring.modulus() - 1));
    }
  }
  return u;
}

}  // namespace covlift::testing
