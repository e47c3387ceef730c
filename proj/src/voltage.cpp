#include "covlift/voltage.hpp"

#include "covlift/error.hpp"

namespace covlift {

const GroupElement& VoltageAssignment::operator()(const Arc& a) const {
  auto it = voltages_.find(a);
  if (it == voltages_.end()) throw Error(ErrorCode::UnknownArc, "arc has no voltage");
  return it->second;
}

namespace {

bool check_t_reduced(const CycleBasis& cb, const VoltageAssignment& va) {
  for (const Edge& e : cb.tree_edges()) {
    if (!va.group().is_zero(va(Arc{e.u, e.v}))) return false;
  }
  return true;
}

}  // namespace

VoltageAssignment validate_voltage(const Graph& g, const CycleBasis& cb, const AbelianGroupSpec& group,
                                   const std::vector<std::pair<Arc, GroupElement>>& raw) {
  VoltageAssignment va;
  va.group_ = group;
  std::map<Arc, GroupElement> given;
  for (const auto& [arc, x] : raw) {
    if (arc.tail >= g.vertex_count() || arc.head >= g.vertex_count() || !g.adjacent(arc.tail, arc.head)) {
      throw Error(ErrorCode::UnknownArc, "voltage given on a non-arc");
    }
    if (!group.contains(x)) throw Error(ErrorCode::SpecMismatch, "voltage is not an element of the group");
    auto [it, inserted] = given.emplace(arc, x);
    if (!inserted && it->second != x) {
      throw Error(ErrorCode::InconsistentOpposites, "arc (" + g.label(arc.tail) + "," + g.label(arc.head) +
                                                         ") given two different voltages");
    }
  }
  for (const Arc& a : g.arcs()) {
    auto forward = given.find(a);
    auto backward = given.find(a.reversed());
    GroupElement value = group.zero();
    if (forward != given.end()) {
      value = forward->second;
      if (backward != given.end() && group.add(forward->second, backward->second) != group.zero()) {
        throw Error(ErrorCode::InconsistentOpposites,
                    "phi(" + g.label(a.tail) + "," + g.label(a.head) + ") is not minus its opposite");
      }
    } else if (backward != given.end()) {
      value = group.neg(backward->second);
    }
    va.voltages_.emplace(a, std::move(value));
  }
  va.t_reduced_ = check_t_reduced(cb, va);
  return va;
}

VoltageAssignment gauge_reduce(const Graph& g, const CycleBasis& cb, const VoltageAssignment& va) {
  const AbelianGroupSpec& group = va.group();
  std::vector<GroupElement> potential;
  potential.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) potential.push_back(walk_voltage(va, cb.tree_path(cb.base(), v)));

  VoltageAssignment out;
  out.group_ = group;
  for (const auto& [arc, x] : va.voltages_) {
    out.voltages_.emplace(arc, group.sub(group.add(potential[arc.tail], x), potential[arc.head]));
  }
  out.t_reduced_ = check_t_reduced(cb, out);
  return out;
}

GroupElement walk_voltage(const VoltageAssignment& va, const Walk& w) {
  GroupElement sum = va.group().zero();
  for (const Arc& a : w.arcs()) sum = va.group().add(sum, va(a));
  return sum;
}

VoltageMatrices build_voltage_matrices(const CycleBasis& cb, const VoltageAssignment& va) {
  if (!va.t_reduced()) throw Error(ErrorCode::NotTReduced, "voltage assignment is not T-reduced");
  const AbelianGroupSpec& group = va.group();
  VoltageMatrices vm{group, {}, {}};
  for (const Walk& loop : cb.cycles()) vm.theta.push_back(walk_voltage(va, loop));

  const std::size_t t = vm.theta.size();
  if (t == 0) return vm;
  for (std::size_t gamma = 0; gamma < group.prime_count(); ++gamma) {
    const PrimeComponent& c = group.components()[gamma];
    PrimePower ring(c.prime, c.top_exponent());
    ModMatrix b(ring, t, c.exponents.size());
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t eta = 0; eta < c.exponents.size(); ++eta) {
        b.set(i, eta, group.embed(gamma, eta, vm.theta[i].residues[group.slot(gamma, eta)]));
      }
    }
    vm.per_prime.push_back({gamma, ring, std::move(b)});
  }
  return vm;
}

}  // namespace covlift
