#include "covlift/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "covlift/error.hpp"

namespace covlift {

namespace {

Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph Graph::validate(std::vector<std::string> vertices,
                      const std::vector<LabelPair>& edges) {
  Graph g;
  g.labels_ = std::move(vertices);
  for (Vertex v = 0; v < g.labels_.size(); ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + g.labels_[v] + "' listed twice");
    }
  }
  g.adjacency_.resize(g.labels_.size());
  for (const auto& [a, b] : edges) {
    auto ia = g.find(a);
    auto ib = g.find(b);
    if (!ia || !ib) {
      throw Error(ErrorCode::UnknownEndpoint,
                  "edge {" + a + "," + b + "} has an endpoint outside the vertex list");
    }
    if (*ia == *ib) throw Error(ErrorCode::LoopEdge, "loop at '" + a + "'");
    Edge e = normalized(*ia, *ib);
    if (!g.edge_lookup_.emplace(e, g.edges_.size()).second) {
      throw Error(ErrorCode::DuplicateEdge, "edge {" + a + "," + b + "} listed twice");
    }
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  if (g.labels_.empty()) throw Error(ErrorCode::Disconnected, "graph has no vertices");
  DisjointSets components(g.labels_.size());
  std::size_t merges = 0;
  for (const Edge& e : g.edges_) merges += components.unite(e.u, e.v);
  if (merges + 1 != g.labels_.size()) throw Error(ErrorCode::Disconnected, "graph is not connected");
  return g;
}

Graph validate_graph(std::vector<std::string> vertices, const std::vector<LabelPair>& edges) {
  return Graph::validate(std::move(vertices), edges);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::vertex(std::string_view label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "'");
  return *v;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  auto it = edge_lookup_.find(normalized(u, v));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<Arc> Graph::arcs() const {
  std::vector<Arc> out;
  out.reserve(2 * edges_.size());
  for (const Edge& e : edges_) {
    out.push_back({e.u, e.v});
    out.push_back({e.v, e.u});
  }
  return out;
}

// --- Walk -------------------------------------------------------------------

Walk::Walk(Vertex start, std::vector<Arc> arcs) : start_(start), arcs_(std::move(arcs)) {
  Vertex at = start_;
  for (const Arc& a : arcs_) {
    if (a.tail != at) throw Error(ErrorCode::InvalidWalk, "arcs are not consecutive");
    at = a.head;
  }
}

Walk Walk::from_vertices(std::span<const Vertex> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidWalk, "a walk needs a start vertex");
  Walk w(vertices.front());
  for (std::size_t i = 1; i < vertices.size(); ++i) w.arcs_.push_back({vertices[i - 1], vertices[i]});
  return w;
}

std::vector<Vertex> Walk::vertices() const {
  std::vector<Vertex> out{start_};
  for (const Arc& a : arcs_) out.push_back(a.head);
  return out;
}

Walk Walk::reversed() const {
  Walk w(end());
  for (auto it = arcs_.rbegin(); it != arcs_.rend(); ++it) w.arcs_.push_back(it->reversed());
  return w;
}

Walk Walk::concat(const Walk& tail) const {
  if (tail.start() != end()) throw Error(ErrorCode::InvalidWalk, "walks do not meet");
  Walk w = *this;
  w.arcs_.insert(w.arcs_.end(), tail.arcs_.begin(), tail.arcs_.end());
  return w;
}

bool Walk::lies_in(const Graph& g) const {
  if (start_ >= g.vertex_count()) return false;
  return std::all_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) {
    return a.tail < g.vertex_count() && a.head < g.vertex_count() && g.adjacent(a.tail, a.head);
  });
}

// --- Automorphism -----------------------------------------------------------

Automorphism Automorphism::identity(std::size_t n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Automorphism(std::move(image));
}

Walk Automorphism::apply(const Walk& w) const {
  std::vector<Arc> arcs;
  arcs.reserve(w.length());
  for (const Arc& a : w.arcs()) arcs.push_back(apply(a));
  return Walk(image_.at(w.start()), std::move(arcs));
}

Automorphism Automorphism::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) inv[image_[v]] = v;
  return Automorphism(std::move(inv));
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  std::vector<Vertex> image(inner.size());
  for (Vertex v = 0; v < inner.size(); ++v) image[v] = outer(inner(v));
  return Automorphism(std::move(image));
}

Automorphism check_automorphism(const Graph& g, std::vector<Vertex> image) {
  const std::size_t n = g.vertex_count();
  if (image.size() != n) throw Error(ErrorCode::NotBijective, "mapping size differs from vertex count");
  std::vector<bool> hit(n, false);
  for (Vertex v : image) {
    if (v >= n || hit[v]) throw Error(ErrorCode::NotBijective, "mapping is not a permutation");
    hit[v] = true;
  }
  // Edge count is preserved by a bijection, so edges mapping to edges also
  // forces non-edges to map to non-edges.
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(image[e.u], image[e.v])) {
      throw Error(ErrorCode::NotAdjacencyPreserving,
                  "edge {" + g.label(e.u) + "," + g.label(e.v) + "} maps to a non-edge {" +
                      g.label(image[e.u]) + "," + g.label(image[e.v]) + "}");
    }
  }
  return Automorphism(std::move(image));
}

Automorphism check_automorphism(const Graph& g, const std::vector<LabelPair>& mapping) {
  std::vector<Vertex> image(g.vertex_count());
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  for (const auto& [from, to] : mapping) {
    Vertex a = g.vertex(from);
    if (seen[a]) throw Error(ErrorCode::NotBijective, "vertex '" + from + "' mapped twice");
    seen[a] = true;
    image[a] = g.vertex(to);
  }
  return check_automorphism(g, std::move(image));
}

// --- CycleBasis -------------------------------------------------------------

bool CycleBasis::is_tree_arc(const Arc& a) const {
  return std::binary_search(tree_edges_.begin(), tree_edges_.end(), normalized(a.tail, a.head));
}

Walk CycleBasis::tree_path(Vertex from, Vertex to) const {
  // Climb from both ends to the lowest common ancestor.
  std::vector<Arc> up;    // from -> lca
  std::vector<Arc> down;  // to -> lca, reversed later
  Vertex a = from;
  Vertex b = to;
  while (depth_.at(a) > depth_.at(b)) {
    up.push_back({a, *parent_[a]});
    a = *parent_[a];
  }
  while (depth_.at(b) > depth_.at(a)) {
    down.push_back({b, *parent_[b]});
    b = *parent_[b];
  }
  while (a != b) {
    up.push_back({a, *parent_[a]});
    a = *parent_[a];
    down.push_back({b, *parent_[b]});
    b = *parent_[b];
  }
  for (auto it = down.rbegin(); it != down.rend(); ++it) up.push_back(it->reversed());
  return Walk(from, std::move(up));
}

std::vector<std::int64_t> CycleBasis::signed_cotree_incidence(const Walk& w) const {
  std::vector<std::int64_t> out(rank(), 0);
  for (const Arc& a : w.arcs()) {
    auto it = cotree_lookup_.find(a);
    if (it != cotree_lookup_.end()) out[it->second.first] += it->second.second;
  }
  return out;
}

CycleBasis build_spanning_tree(const Graph& g, Vertex base, const TreeOptions& options) {
  const std::size_t n = g.vertex_count();
  if (base >= n) throw Error(ErrorCode::BaseNotInGraph, "base vertex is not in the graph");

  CycleBasis cb;
  cb.base_ = base;

  std::vector<bool> in_tree(g.edge_count(), false);
  if (options.tree_edges || options.cotree_arcs) {
    if (options.tree_edges) {
      for (const auto& [a, b] : *options.tree_edges) {
        auto idx = g.edge_index(a, b);
        if (!idx) throw Error(ErrorCode::NotATree, "tree edge is not an edge of the graph");
        if (in_tree[*idx]) throw Error(ErrorCode::NotATree, "tree edge listed twice");
        in_tree[*idx] = true;
      }
    } else {
      std::fill(in_tree.begin(), in_tree.end(), true);
      for (const Arc& a : *options.cotree_arcs) {
        auto idx = g.edge_index(a.tail, a.head);
        if (!idx) throw Error(ErrorCode::InvalidCotreeArcs, "cotree arc is not an arc of the graph");
        if (!in_tree[*idx]) throw Error(ErrorCode::InvalidCotreeArcs, "cotree edge listed twice");
        in_tree[*idx] = false;
      }
    }
    std::size_t count = std::count(in_tree.begin(), in_tree.end(), true);
    if (count + 1 != n) throw Error(ErrorCode::NotATree, "tree must have |V| - 1 edges");
    DisjointSets sets(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (in_tree[i] && !sets.unite(g.edges()[i].u, g.edges()[i].v)) {
        throw Error(ErrorCode::NotATree, "tree edges contain a cycle");
      }
    }
  } else {
    std::vector<bool> visited(n, false);
    std::deque<Vertex> queue{base};
    visited[base] = true;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (visited[v]) continue;
        visited[v] = true;
        in_tree[*g.edge_index(u, v)] = true;
        queue.push_back(v);
      }
    }
  }

  // Root the tree at the base.
  std::vector<std::vector<Vertex>> tree_adj(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!in_tree[i]) continue;
    const Edge& e = g.edges()[i];
    cb.tree_edges_.push_back(e);
    tree_adj[e.u].push_back(e.v);
    tree_adj[e.v].push_back(e.u);
  }
  std::sort(cb.tree_edges_.begin(), cb.tree_edges_.end());
  cb.parent_.assign(n, std::nullopt);
  cb.depth_.assign(n, 0);
  std::vector<bool> visited(n, false);
  std::deque<Vertex> queue{base};
  visited[base] = true;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : tree_adj[u]) {
      if (visited[v]) continue;
      visited[v] = true;
      cb.parent_[v] = u;
      cb.depth_[v] = cb.depth_[u] + 1;
      queue.push_back(v);
    }
  }

  if (options.cotree_arcs) {
    std::vector<bool> covered(g.edge_count(), false);
    for (const Arc& a : *options.cotree_arcs) {
      auto idx = g.edge_index(a.tail, a.head);
      if (!idx || in_tree[*idx] || covered[*idx]) {
        throw Error(ErrorCode::InvalidCotreeArcs, "cotree arcs must list each cotree edge exactly once");
      }
      covered[*idx] = true;
      cb.cotree_arcs_.push_back(a);
    }
    if (cb.cotree_arcs_.size() != g.cycle_rank()) {
      throw Error(ErrorCode::InvalidCotreeArcs, "cotree arcs must cover every cotree edge");
    }
  } else {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (!in_tree[i]) cb.cotree_arcs_.push_back({g.edges()[i].u, g.edges()[i].v});
    }
    std::sort(cb.cotree_arcs_.begin(), cb.cotree_arcs_.end());
  }

  for (std::size_t i = 0; i < cb.cotree_arcs_.size(); ++i) {
    const Arc& h = cb.cotree_arcs_[i];
    cb.cotree_lookup_[h] = {i, +1};
    cb.cotree_lookup_[h.reversed()] = {i, -1};
  }
  for (const Arc& h : cb.cotree_arcs_) {
    Walk loop = cb.tree_path(base, h.tail).concat(Walk(h.tail, {h})).concat(cb.tree_path(h.head, base));
    cb.cycles_.push_back(std::move(loop));
  }
  return cb;
}

}  // namespace covlift
