#pragma once

// Seeded random instances for fuzzing and agreement testing.

#include <cstdint>
#include <vector>

#include "covlift/graph.hpp"
#include "covlift/instance.hpp"

namespace covlift {

struct GenOptions {
  std::size_t max_vertices = 6;
  std::int64_t max_group_order = 64;
  /// Bound on exponent(A)^t so the kernel oracle stays enumerable.
  std::int64_t kernel_budget = std::int64_t{1} << 24;
  std::size_t max_automorphisms = 3;
  /// Put random voltages on tree arcs too.
  bool non_reduced = false;
};

/// Deterministic per (seed, options): same bytes from to_json every run.
Instance generate_instance(std::uint64_t seed, const GenOptions& options = {});

/// All automorphisms by backtracking over adjacency-preserving partial maps.
/// Intended for small graphs (a dozen vertices or so).
std::vector<Automorphism> enumerate_automorphisms(const Graph& g);

}  // namespace covlift
