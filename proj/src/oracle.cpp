#include "covlift/oracle.hpp"

#include <algorithm>
#include <deque>

#include "covlift/error.hpp"

namespace covlift {

namespace {

bool within_power_budget(std::int64_t base, std::size_t exponent, std::int64_t budget) {
  std::int64_t total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (!modular::checked_mul(total, base, total) || total > budget) return false;
  }
  return total <= budget;
}

}  // namespace

bool kernel_oracle(const VoltageMatrices& vm, const IntMatrix& s, std::int64_t budget) {
  const AbelianGroupSpec& group = vm.group;
  const std::size_t t = vm.theta.size();
  if (s.rows() != t || s.cols() != t) throw Error(ErrorCode::DimensionMismatch, "S must be t x t");
  const std::int64_t e = group.exponent();
  if (!within_power_budget(e, t, budget)) throw Error(ErrorCode::BudgetExceeded, "exponent^t exceeds the budget");

  // image_i = phi(alpha(L_i)) = sum_j S_ij theta_j
  std::vector<GroupElement> image(t, group.zero());
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) image[i] = group.add(image[i], group.scale(s(i, j), vm.theta[j]));

  // Odometer over w with running sums of w.theta and w.image, kept as
  // flat residue arrays.
  const std::size_t slots = group.slot_count();
  std::vector<Residue> lhs(slots, 0);
  std::vector<Residue> rhs(slots, 0);
  std::vector<std::int64_t> w(t, 0);
  auto zero = [](const std::vector<Residue>& x) {
    return std::all_of(x.begin(), x.end(), [](Residue r) { return r == 0; });
  };
  while (true) {
    if (zero(lhs) != zero(rhs)) return false;
    std::size_t i = 0;
    for (; i < t; ++i) {
      for (std::size_t k = 0; k < slots; ++k) {
        const Residue m = group.slot_modulus(k);
        lhs[k] = modular::add(lhs[k], vm.theta[i].residues[k], m);
        rhs[k] = modular::add(rhs[k], image[i].residues[k], m);
      }
      if (++w[i] < e) break;
      // wrapped: e further copies of theta_i and image_i sum to zero
      w[i] = 0;
    }
    if (i == t) return true;
  }
}

bool DerivedGraph::adjacent(std::size_t x, std::size_t y) const {
  const auto& n = adjacency_.at(x);
  return std::binary_search(n.begin(), n.end(), y);
}

DerivedGraph build_derived_graph(const Graph& g, const VoltageAssignment& va, std::int64_t budget) {
  const AbelianGroupSpec& group = va.group();
  std::int64_t total = 0;
  if (!modular::checked_mul(static_cast<std::int64_t>(g.vertex_count()), group.order(), total) || total > budget) {
    throw Error(ErrorCode::BudgetExceeded, "derived graph exceeds the budget");
  }
  DerivedGraph d;
  d.base_vertices_ = g.vertex_count();
  d.fiber_ = group.order();
  d.adjacency_.resize(static_cast<std::size_t>(total));
  for (const Edge& e : g.edges()) {
    const GroupElement& phi = va(Arc{e.u, e.v});
    for (std::int64_t a = 0; a < group.order(); ++a) {
      const std::int64_t b = group.index_of(group.add(phi, group.element_at(a)));
      const std::size_t x = d.vertex(e.u, a);
      const std::size_t y = d.vertex(e.v, b);
      d.adjacency_[x].push_back(y);
      d.adjacency_[y].push_back(x);
      ++d.edge_count_;
    }
  }
  for (auto& n : d.adjacency_) std::sort(n.begin(), n.end());
  return d;
}

std::vector<std::size_t> fiber_translation(const DerivedGraph& derived, const AbelianGroupSpec& group,
                                           const GroupElement& shift) {
  std::vector<std::size_t> image(derived.vertex_count());
  for (std::size_t x = 0; x < image.size(); ++x) {
    const GroupElement a = group.element_at(derived.fiber_index(x));
    image[x] = derived.vertex(derived.project(x), group.index_of(group.add(a, shift)));
  }
  return image;
}

bool verify_lift(const DerivedGraph& derived, const Automorphism& alpha, const std::vector<std::size_t>& image) {
  const std::size_t n = derived.vertex_count();
  if (image.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t y = image[x];
    if (y >= n || hit[y]) return false;
    hit[y] = true;
    if (derived.project(y) != alpha(derived.project(x))) return false;
  }
  // A bijection sending edges to edges on a finite graph preserves non-edges.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z : derived.neighbors(x)) {
      if (!derived.adjacent(image[x], image[z])) return false;
    }
  }
  return true;
}

LiftSearchResult lift_search_oracle(const Graph& g, const CycleBasis& cb, const VoltageAssignment& va,
                                    const Automorphism& alpha, std::int64_t budget) {
  const DerivedGraph derived = build_derived_graph(g, va, budget);
  const AbelianGroupSpec& group = va.group();
  const std::int64_t order = group.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Propagates x -> y along the base edge rule; false on a clash.
  auto propagate = [&](std::vector<std::size_t>& image, std::size_t start, std::size_t target,
                       std::vector<std::size_t>* visited_order) {
    image[start] = target;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      if (visited_order) visited_order->push_back(x);
      const Vertex u = derived.project(x);
      const GroupElement a = group.element_at(derived.fiber_index(x));
      const GroupElement b = group.element_at(derived.fiber_index(image[x]));
      for (Vertex v : g.neighbors(u)) {
        const std::size_t neighbor = derived.vertex(v, group.index_of(group.add(va(Arc{u, v}), a)));
        const Arc mapped = alpha.apply(Arc{u, v});
        const std::size_t wanted = derived.vertex(mapped.head, group.index_of(group.add(va(mapped), b)));
        if (image[neighbor] == kUnset) {
          image[neighbor] = wanted;
          queue.push_back(neighbor);
        } else if (image[neighbor] != wanted) {
          return false;
        }
      }
    }
    return true;
  };

  const std::size_t root = derived.vertex(cb.base(), 0);
  for (std::int64_t offset = 0; offset < order; ++offset) {
    std::vector<std::size_t> image(derived.vertex_count(), kUnset);
    std::vector<std::size_t> component;
    if (!propagate(image, root, derived.vertex(alpha(cb.base()), offset), &component)) continue;

    // Extend to the other components: conjugate by the translation that
    // carries each component back onto the root component.
    for (std::size_t x = 0; x < image.size(); ++x) {
      if (image[x] != kUnset) continue;
      const Vertex v = derived.project(x);
      const auto it = std::find_if(component.begin(), component.end(),
                                   [&](std::size_t y) { return derived.project(y) == v; });
      const GroupElement shift =
          group.sub(group.element_at(derived.fiber_index(x)), group.element_at(derived.fiber_index(*it)));
      const GroupElement target_fiber = group.add(group.element_at(derived.fiber_index(image[*it])), shift);
      if (!propagate(image, x, derived.vertex(alpha(v), group.index_of(target_fiber)), nullptr)) break;
    }
    if (std::find(image.begin(), image.end(), kUnset) != image.end()) continue;
    if (!verify_lift(derived, alpha, image)) continue;
    return {true, LiftCertificate{offset, std::move(image)}};
  }
  return {false, std::nullopt};
}

}  // namespace covlift
