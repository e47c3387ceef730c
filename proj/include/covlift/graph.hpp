#pragma once

// Finite simple undirected graphs, arcs, walks, automorphisms and the
// spanning-tree cycle basis of the first homology group.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace covlift {

/// Vertices are addressed by their position in the input vertex list.
using Vertex = std::size_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Arc reversed() const { return {head, tail}; }

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Undirected edge stored with u < v in vertex-list order.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using LabelPair = std::pair<std::string, std::string>;

class Graph {
 public:
  /// Validates and builds a graph. Vertex order is the input order; edge
  /// order is the input order with each edge normalized to u < v.
  static Graph validate(std::vector<std::string> vertices,
                        const std::vector<LabelPair>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// |E| - |V| + 1, the rank of H_1.
  std::size_t cycle_rank() const { return edges_.size() + 1 - labels_.size(); }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws UnknownVertex.
  Vertex vertex(std::string_view label) const;

  std::span<const Edge> edges() const { return edges_; }
  /// Neighbours in ascending vertex order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  std::vector<Arc> arcs() const;

 private:
  Graph() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::map<Edge, std::size_t> edge_lookup_;
};

/// Free-function spelling of Graph::validate.
Graph validate_graph(std::vector<std::string> vertices,
                     const std::vector<LabelPair>& edges);

/// A walk is a start vertex plus a sequence of head-to-tail arcs. The empty
/// walk sits at its start vertex.
class Walk {
 public:
  explicit Walk(Vertex start) : start_(start) {}
  /// Throws InvalidWalk if the arcs are not consecutive from `start`.
  Walk(Vertex start, std::vector<Arc> arcs);

  static Walk from_vertices(std::span<const Vertex> vertices);

  Vertex start() const { return start_; }
  Vertex end() const { return arcs_.empty() ? start_ : arcs_.back().head; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t length() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool closed() const { return start() == end(); }

  std::vector<Vertex> vertices() const;
  Walk reversed() const;
  /// Throws InvalidWalk if `tail.start() != end()`.
  Walk concat(const Walk& tail) const;
  /// Every arc is an arc of `g`.
  bool lies_in(const Graph& g) const;

  friend bool operator==(const Walk&, const Walk&) = default;

 private:
  Vertex start_;
  std::vector<Arc> arcs_;
};

class Automorphism {
 public:
  static Automorphism identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_.at(v); }
  Arc apply(const Arc& a) const { return {image_.at(a.tail), image_.at(a.head)}; }
  Walk apply(const Walk& w) const;
  std::span<const Vertex> image() const { return image_; }

  Automorphism inverse() const;

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  friend Automorphism check_automorphism(const Graph&, std::vector<Vertex>);
  friend Automorphism compose(const Automorphism&, const Automorphism&);
  explicit Automorphism(std::vector<Vertex> image) : image_(std::move(image)) {}

  std::vector<Vertex> image_;
};

/// Returns the automorphism x -> image[x] after checking it is a bijection
/// preserving adjacency and non-adjacency. Throws NotBijective or
/// NotAdjacencyPreserving.
Automorphism check_automorphism(const Graph& g, std::vector<Vertex> image);
/// Same, from a label -> label mapping; unmapped vertices are fixed.
Automorphism check_automorphism(const Graph& g,
                                const std::vector<LabelPair>& mapping);

/// outer ∘ inner: first inner, then outer.
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

struct TreeOptions {
  /// Tree edges as vertex pairs; the complement is the cotree.
  std::optional<std::vector<std::pair<Vertex, Vertex>>> tree_edges;
  /// Ordered, oriented cotree arcs h(e_1)..h(e_t). When given without a
  /// tree, the tree is the complement of these edges.
  std::optional<std::vector<Arc>> cotree_arcs;
};

/// Spanning tree, base vertex, ordered cotree arcs and fundamental closed
/// walks L_i = W(v0, u_i) h(e_i) W(v_i, v0).
class CycleBasis {
 public:
  Vertex base() const { return base_; }
  std::size_t rank() const { return cotree_arcs_.size(); }
  std::size_t vertex_count() const { return parent_.size(); }
  std::span<const Arc> cotree_arcs() const { return cotree_arcs_; }
  std::span<const Walk> cycles() const { return cycles_; }
  /// Tree edges, normalized u < v, in ascending order.
  std::span<const Edge> tree_edges() const { return tree_edges_; }
  bool is_tree_arc(const Arc& a) const;

  /// The unique reduced walk from `from` to `to` inside the tree.
  Walk tree_path(Vertex from, Vertex to) const;

  /// Entry j counts occurrences of h(e_j) in `w` minus occurrences of its
  /// opposite arc.
  std::vector<std::int64_t> signed_cotree_incidence(const Walk& w) const;

 private:
  friend CycleBasis build_spanning_tree(const Graph&, Vertex, const TreeOptions&);
  CycleBasis() = default;

  Vertex base_ = 0;
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::size_t> depth_;
  std::vector<Edge> tree_edges_;
  std::vector<Arc> cotree_arcs_;
  std::vector<Walk> cycles_;
  // arc -> (cotree index, +1 / -1)
  std::map<Arc, std::pair<std::size_t, int>> cotree_lookup_;
};

/// Default tree: breadth-first from `base`, neighbours in vertex order.
/// Default cotree arcs: oriented u -> v with u before v, sorted by (u, v).
/// Throws BaseNotInGraph, NotATree, InvalidCotreeArcs.
CycleBasis build_spanning_tree(const Graph& g, Vertex base,
                               const TreeOptions& options = {});

}  // namespace covlift
