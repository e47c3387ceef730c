#pragma once

// Brute-force deciders used to validate the lifting criterion at desk
// scale. Neither depends on the normal form or on the other.

#include <cstdint>
#include <optional>
#include <vector>

#include "covlift/graph.hpp"
#include "covlift/voltage.hpp"
#include "covlift/zn_matrix.hpp"

namespace covlift {

inline constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 24;

/// Enumerates w in (Z/e)^t, e the group exponent, and compares
///   {w : sum w_i theta_i = 0}  with  {w : sum_j (wS)_j theta_j = 0}.
/// Throws BudgetExceeded if e^t > budget.
bool kernel_oracle(const VoltageMatrices& vm, const IntMatrix& s, std::int64_t budget = kDefaultBudget);

/// Gamma x_phi A. Vertex (v, g) has index v * |A| + index_of(g).
class DerivedGraph {
 public:
  std::size_t base_vertex_count() const { return base_vertices_; }
  std::int64_t fiber_size() const { return fiber_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::size_t vertex(Vertex v, std::int64_t element_index) const {
    return v * static_cast<std::size_t>(fiber_) + static_cast<std::size_t>(element_index);
  }
  Vertex project(std::size_t x) const { return x / static_cast<std::size_t>(fiber_); }
  std::int64_t fiber_index(std::size_t x) const { return static_cast<std::int64_t>(x % fiber_); }

  /// Sorted neighbour list.
  const std::vector<std::size_t>& neighbors(std::size_t x) const { return adjacency_.at(x); }
  bool adjacent(std::size_t x, std::size_t y) const;

 private:
  friend DerivedGraph build_derived_graph(const Graph&, const VoltageAssignment&, std::int64_t);

  std::size_t base_vertices_ = 0;
  std::int64_t fiber_ = 1;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// E = {{(u,g),(v, phi(u,v)+g)}}. Throws BudgetExceeded if |V||A| > budget.
DerivedGraph build_derived_graph(const Graph& g, const VoltageAssignment& va,
                                 std::int64_t budget = kDefaultBudget);

/// Derived-graph vertex map with pi(lift(x)) = alpha(pi(x)).
struct LiftCertificate {
  /// Image of (v0, 0) is (alpha(v0), offset).
  std::int64_t offset_index = 0;
  std::vector<std::size_t> image;
};

struct LiftSearchResult {
  bool lifts = false;
  std::optional<LiftCertificate> certificate;
};

/// Tries every offset g for (v0,0) -> (alpha(v0), g), propagating the edge
/// rule over the component of (v0,0); a consistent offset is extended to all
/// components by fiber translations and re-verified before returning.
/// Throws BudgetExceeded.
LiftSearchResult lift_search_oracle(const Graph& g, const CycleBasis& cb, const VoltageAssignment& va,
                                    const Automorphism& alpha, std::int64_t budget = kDefaultBudget);

/// Independent check that `image` is an automorphism of `derived` covering alpha.
bool verify_lift(const DerivedGraph& derived, const Automorphism& alpha, const std::vector<std::size_t>& image);

/// The deck translation (v, a) -> (v, a + g) as a vertex map.
std::vector<std::size_t> fiber_translation(const DerivedGraph& derived, const AbelianGroupSpec& group,
                                           const GroupElement& shift);

}  // namespace covlift
