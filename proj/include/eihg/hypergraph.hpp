#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "eihg/error.hpp"

namespace eihg {

using VertexId = std::uint32_t;

// A hyperedge is kept as a strictly ascending list of vertex labels.
using Edge = std::vector<VertexId>;

/// Finite hypergraph without loops or multiple edges.
///
/// Vertices are positive labels kept in ascending order; isolated vertices
/// are allowed. Every edge has at least two vertices and the edge family is
/// stored sorted lexicographically, so two hypergraphs built from permuted
/// input compare equal with `==`.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validating constructor. Duplicate edges are merged; a duplicate vertex
  /// label, a zero label, an edge with fewer than two distinct vertices or an
  /// edge leaving the vertex set throws `Error`.
  static Hypergraph make(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Vertex set {1, ..., n} with the given edges.
  static Hypergraph on_range(VertexId n, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_vertex(VertexId v) const;
  bool has_edge(const Edge& e) const;
  std::size_t max_edge_size() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  friend class HypergraphBuilder;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

// Collects edges over a fixed, already validated vertex set. Used by the
// library's own operators; edges are sorted and deduplicated on build().
class HypergraphBuilder {
 public:
  explicit HypergraphBuilder(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {}
  void add(Edge e) { edges_.push_back(std::move(e)); }
  void reserve(std::size_t n) { edges_.reserve(n); }
  Hypergraph build() &&;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
};

bool hypergraph_equal(const Hypergraph& a, const Hypergraph& b);

/// Edge-family union of two hypergraphs on the same vertex set.
Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b);

bool is_linear(const Hypergraph& h);
bool is_k_uniform(const Hypergraph& h, std::size_t k);
std::size_t degree(const Hypergraph& h, VertexId v);

// Sorted-set helpers shared across modules.
Edge intersect(const Edge& a, const Edge& b);
std::size_t intersection_size(const Edge& a, const Edge& b);
bool is_subset(const Edge& a, const Edge& b);

/// Simple undirected graph: a 2-uniform hypergraph.
class Graph {
 public:
  Graph() = default;
  /// Throws `NotAGraph` unless `h` is 2-uniform.
  explicit Graph(Hypergraph h);
  static Graph make(std::vector<VertexId> vertices,
                    std::vector<std::pair<VertexId, VertexId>> edges);

  const Hypergraph& hypergraph() const noexcept { return h_; }
  const std::vector<VertexId>& vertices() const noexcept { return h_.vertices(); }
  const std::vector<Edge>& edges() const noexcept { return h_.edges(); }
  std::size_t vertex_count() const noexcept { return h_.vertex_count(); }
  std::size_t edge_count() const noexcept { return h_.edge_count(); }
  bool adjacent(VertexId a, VertexId b) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return eihg::degree(h_, v); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Hypergraph h_;
};

/// Directed graph without self-arcs; parallel arcs are merged.
class Digraph {
 public:
  using Arc = std::pair<VertexId, VertexId>;

  Digraph() = default;
  static Digraph make(std::vector<VertexId> vertices, std::vector<Arc> arcs);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  /// In-neighborhood N^-(v): all u with an arc u -> v, ascending.
  std::vector<VertexId> in_neighbors(VertexId v) const;
  /// Out-neighborhood N^+(v): all w with an arc v -> w, ascending.
  std::vector<VertexId> out_neighbors(VertexId v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
};

}  // namespace eihg
