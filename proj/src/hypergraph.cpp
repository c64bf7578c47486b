#include "eihg/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace eihg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateVertexLabel: return "DuplicateVertexLabel";
    case ErrorKind::InvalidVertexLabel: return "InvalidVertexLabel";
    case ErrorKind::EdgeOutsideVertexSet: return "EdgeOutsideVertexSet";
    case ErrorKind::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorKind::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::SelfArc: return "SelfArc";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::FullVertexSetAlreadyEdge: return "FullVertexSetAlreadyEdge";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::UnknownCatalogId: return "UnknownCatalogId";
    case ErrorKind::NotInCatalog: return "NotInCatalog";
    case ErrorKind::OutOfTheoremRange: return "OutOfTheoremRange";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotALegOfThisTree: return "NotALegOfThisTree";
    case ErrorKind::KnownUnrealizable: return "KnownUnrealizable";
    case ErrorKind::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

Hypergraph Hypergraph::make(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end()) {
    throw Error(ErrorKind::DuplicateVertexLabel, "vertex " + std::to_string(*it) + " listed twice");
  }
  if (!vertices.empty() && vertices.front() == 0) {
    throw Error(ErrorKind::InvalidVertexLabel, "vertex labels must be positive");
  }
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() < 2) {
      throw Error(ErrorKind::EdgeTooSmall, "edges need at least two distinct vertices");
    }
    for (VertexId v : e) {
      if (!contains(vertices, v)) {
        throw Error(ErrorKind::EdgeOutsideVertexSet,
                    "edge uses vertex " + std::to_string(v) + " which is not in the vertex set");
      }
    }
  }
  sort_unique(edges);
  Hypergraph h;
  h.vertices_ = std::move(vertices);
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::on_range(VertexId n, std::vector<Edge> edges) {
  std::vector<VertexId> vs(n);
  std::iota(vs.begin(), vs.end(), VertexId{1});
  return make(std::move(vs), std::move(edges));
}

bool Hypergraph::has_vertex(VertexId v) const { return contains(vertices_, v); }

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Hypergraph::max_edge_size() const {
  std::size_t m = 0;
  for (const auto& e : edges_) m = std::max(m, e.size());
  return m;
}

Hypergraph HypergraphBuilder::build() && {
  sort_unique(edges_);
  Hypergraph h;
  h.vertices_ = std::move(vertices_);
  h.edges_ = std::move(edges_);
  return h;
}

bool hypergraph_equal(const Hypergraph& a, const Hypergraph& b) { return a == b; }

Hypergraph hypergraph_union(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertices() != b.vertices()) {
    throw Error(ErrorKind::VertexSetMismatch, "union needs identical vertex sets");
  }
  std::vector<Edge> merged;
  merged.reserve(a.edge_count() + b.edge_count());
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(merged));
  HypergraphBuilder builder(a.vertices());
  for (auto& e : merged) builder.add(std::move(e));
  return std::move(builder).build();
}

Edge intersect(const Edge& a, const Edge& b) {
  Edge out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool is_subset(const Edge& a, const Edge& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_linear(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (intersection_size(es[i], es[j]) > 1) return false;
    }
  }
  return true;
}

bool is_k_uniform(const Hypergraph& h, std::size_t k) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [k](const Edge& e) { return e.size() == k; });
}

std::size_t degree(const Hypergraph& h, VertexId v) {
  if (!h.has_vertex(v)) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the hypergraph");
  }
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(),
      [v](const Edge& e) { return std::binary_search(e.begin(), e.end(), v); }));
}

Graph::Graph(Hypergraph h) : h_(std::move(h)) {
  if (!is_k_uniform(h_, 2)) {
    throw Error(ErrorKind::NotAGraph, "every edge of a graph must have exactly two vertices");
  }
}

Graph Graph::make(std::vector<VertexId> vertices,
                  std::vector<std::pair<VertexId, VertexId>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back({a, b});
  return Graph(Hypergraph::make(std::move(vertices), std::move(es)));
}

bool Graph::adjacent(VertexId a, VertexId b) const {
  if (a == b) return false;
  return h_.has_edge(a < b ? Edge{a, b} : Edge{b, a});
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  if (!h_.has_vertex(v)) {
    throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v) + " is not in the graph");
  }
  std::vector<VertexId> out;
  for (const auto& e : h_.edges()) {
    if (e[0] == v) out.push_back(e[1]);
    if (e[1] == v) out.push_back(e[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph Digraph::make(std::vector<VertexId> vertices, std::vector<Arc> arcs) {
  std::sort(vertices.begin(), vertices.end());
  if (auto it = std::adjacent_find(vertices.begin(), vertices.end()); it != vertices.end()) {
    throw Error(ErrorKind::DuplicateVertexLabel, "vertex " + std::to_string(*it) + " listed twice");
  }
  if (!vertices.empty() && vertices.front() == 0) {
    throw Error(ErrorKind::InvalidVertexLabel, "vertex labels must be positive");
  }
  for (auto [u, v] : arcs) {
    if (u == v) throw Error(ErrorKind::SelfArc, "self-arc at vertex " + std::to_string(u));
    if (!contains(vertices, u) || !contains(vertices, v)) {
      throw Error(ErrorKind::EdgeOutsideVertexSet, "arc endpoint outside the vertex set");
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  Digraph d;
  d.vertices_ = std::move(vertices);
  d.arcs_ = std::move(arcs);
  return d;
}

std::vector<VertexId> Digraph::in_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (auto [a, b] : arcs_) {
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> Digraph::out_neighbors(VertexId v) const {
  // arcs_ is sorted by source, so the out-neighbors come out ascending.
  std::vector<VertexId> out;
  for (auto [a, b] : arcs_) {
    if (a == v) out.push_back(b);
  }
  return out;
}

}  // namespace eihg
