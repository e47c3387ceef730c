#include "covlift/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "covlift/report.hpp"

namespace covlift {

namespace {

// mt19937_64's output sequence is fixed by the standard; the distributions
// are not, so draws are reduced by hand.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

bool small_enough(std::int64_t base, std::size_t power, std::int64_t budget) {
  std::int64_t total = 1;
  for (std::size_t i = 0; i < power; ++i) {
    if (!modular::checked_mul(total, base, total) || total > budget) return false;
  }
  return true;
}

void extend(const Graph& g, std::vector<Vertex>& image, std::vector<bool>& used, std::vector<Automorphism>& out) {
  const Vertex u = image.size();
  if (u == g.vertex_count()) {
    out.push_back(check_automorphism(g, image));
    return;
  }
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (used[x] || g.neighbors(x).size() != g.neighbors(u).size()) continue;
    bool ok = true;
    for (Vertex v = 0; v < u && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(x, image[v]);
    if (!ok) continue;
    used[x] = true;
    image.push_back(x);
    extend(g, image, used, out);
    image.pop_back();
    used[x] = false;
  }
}

}  // namespace

std::vector<Automorphism> enumerate_automorphisms(const Graph& g) {
  std::vector<Automorphism> out;
  std::vector<Vertex> image;
  std::vector<bool> used(g.vertex_count(), false);
  extend(g, image, used, out);
  return out;
}

Instance generate_instance(std::uint64_t seed, const GenOptions& options) {
  Draw draw(seed);
  Instance in;

  const std::size_t n = static_cast<std::size_t>(draw.range(2, std::max<std::int64_t>(2, options.max_vertices)));
  for (std::size_t v = 0; v < n; ++v) in.vertices.push_back(std::to_string(v));
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  auto add_edge = [&](std::size_t a, std::size_t b) {
    adjacent[a][b] = adjacent[b][a] = true;
    in.edges.emplace_back(in.vertices[a], in.vertices[b]);
  };
  for (std::size_t v = 1; v < n; ++v) add_edge(draw.below(v), v);
  const unsigned density = static_cast<unsigned>(draw.range(10, 70));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!adjacent[a][b] && draw.chance(density)) add_edge(a, b);
  in.base = in.vertices[draw.below(n)];

  Graph g = validate_graph(in.vertices, in.edges);
  const CycleBasis cb = build_spanning_tree(g, g.vertex(in.base));
  in.tree.emplace();
  for (const Edge& e : cb.tree_edges()) in.tree->emplace_back(g.label(e.u), g.label(e.v));

  // Cyclic factors with bounded order and exponent^t within the kernel budget.
  const std::size_t t = cb.rank();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::int64_t> orders;
    std::int64_t order = 1;
    std::int64_t exponent = 1;
    const std::size_t factors = static_cast<std::size_t>(draw.range(1, 3));
    for (std::size_t i = 0; i < factors; ++i) {
      const std::int64_t cap = options.max_group_order / order;
      if (cap < 2) break;
      const std::int64_t m = draw.range(2, std::min<std::int64_t>(cap, 16));
      if (!small_enough(lcm(exponent, m), t, options.kernel_budget)) continue;
      orders.push_back(m);
      order *= m;
      exponent = lcm(exponent, m);
    }
    if (!orders.empty()) {
      in.group = std::move(orders);
      break;
    }
  }
  if (in.group.empty()) in.group = {2};

  const bool sparse = draw.chance(30);
  auto random_residues = [&] {
    std::vector<std::int64_t> r;
    for (std::int64_t m : in.group) r.push_back(sparse && draw.chance(50) ? 0 : draw.range(0, m - 1));
    return r;
  };
  for (const Arc& h : cb.cotree_arcs()) in.voltages.push_back({{g.label(h.tail), g.label(h.head)}, random_residues()});
  if (options.non_reduced) {
    for (const Edge& e : cb.tree_edges()) {
      const bool flip = draw.chance(50);
      const Vertex a = flip ? e.v : e.u;
      const Vertex b = flip ? e.u : e.v;
      in.voltages.push_back({{g.label(a), g.label(b)}, random_residues()});
    }
  }

  std::vector<Automorphism> group = enumerate_automorphisms(g);
  const std::size_t count = std::min(group.size(), static_cast<std::size_t>(draw.range(1, options.max_automorphisms)));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pick = draw.below(group.size());
    const Automorphism alpha = group[pick];
    group.erase(group.begin() + static_cast<std::ptrdiff_t>(pick));
    in.automorphisms.emplace_back("a" + std::to_string(i + 1), cycle_notation(g, alpha));
  }
  return in;
}

}  // namespace covlift
