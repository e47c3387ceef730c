#pragma once

// Voltage assignments phi: A(Gamma) -> A with phi(v,u) = -phi(u,v), their
// reduction to a spanning tree, and the per-prime matrices B_gamma built
// from the fundamental-cycle voltages theta_i = phi(L_i).

#include <map>
#include <utility>
#include <vector>

#include "covlift/abelian.hpp"
#include "covlift/graph.hpp"
#include "covlift/zn_matrix.hpp"

namespace covlift {

class VoltageAssignment {
 public:
  const AbelianGroupSpec& group() const { return group_; }
  /// Throws UnknownArc for an arc outside the graph.
  const GroupElement& operator()(const Arc& a) const;
  /// Every tree arc carries 0 with respect to the basis used at validation.
  bool t_reduced() const { return t_reduced_; }
  /// Voltages on every arc, both orientations, in Arc order.
  const std::map<Arc, GroupElement>& arcs() const { return voltages_; }

 private:
  friend VoltageAssignment validate_voltage(const Graph&, const CycleBasis&, const AbelianGroupSpec&,
                                            const std::vector<std::pair<Arc, GroupElement>>&);
  friend VoltageAssignment gauge_reduce(const Graph&, const CycleBasis&, const VoltageAssignment&);

  AbelianGroupSpec group_;
  std::map<Arc, GroupElement> voltages_;
  bool t_reduced_ = false;
};

/// Completes opposite arcs by negation; arcs absent from `raw` get 0.
/// Throws UnknownArc, InconsistentOpposites, SpecMismatch.
VoltageAssignment validate_voltage(const Graph& g, const CycleBasis& cb, const AbelianGroupSpec& group,
                                   const std::vector<std::pair<Arc, GroupElement>>& raw);

/// phi'(u,v) = f(u) + phi(u,v) - f(v) with f(v) = phi(W(v0, v)).
VoltageAssignment gauge_reduce(const Graph& g, const CycleBasis& cb, const VoltageAssignment& va);

/// Sum of arc voltages along `w`; 0 for the empty walk.
GroupElement walk_voltage(const VoltageAssignment& va, const Walk& w);

struct PrimeVoltageMatrix {
  std::size_t gamma = 0;
  PrimePower ring;
  /// t x a_gamma, (B)_{i,j} = iota_{gamma,j}(theta_i^(gamma)(j)).
  ModMatrix b;
};

struct VoltageMatrices {
  AbelianGroupSpec group;
  std::vector<GroupElement> theta;
  /// One per prime; empty when t = 0.
  std::vector<PrimeVoltageMatrix> per_prime;
};

/// Throws NotTReduced.
VoltageMatrices build_voltage_matrices(const CycleBasis& cb, const VoltageAssignment& va);

}  // namespace covlift
