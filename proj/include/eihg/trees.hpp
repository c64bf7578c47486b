#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "eihg/hypergraph.hpp"

namespace eihg {

bool is_tree(const Graph& g);

/// A path (v0, v1, ..., vs) hanging off a branch vertex: deg(v0) >= 3,
/// deg(v1..v_{s-1}) = 2 and deg(vs) = 1 in the host tree.
struct Leg {
  std::vector<VertexId> vertices;

  std::size_t length() const { return vertices.size() - 1; }
  VertexId joint() const { return vertices.front(); }
  VertexId end() const { return vertices.back(); }

  friend bool operator==(const Leg&, const Leg&) = default;
  friend auto operator<=>(const Leg& a, const Leg& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.vertices <=> b.vertices;
  }
};

/// All legs of a tree, ordered by (length, vertex sequence). Paths have none.
std::vector<Leg> find_legs(const Graph& tree);

/// Removes v1..vs and their edges; the joint stays.
Graph delete_leg(const Graph& tree, const Leg& leg);

struct CanonicalTree {
  std::string code;
  /// Input vertex -> canonical label in 1..n. Isomorphic trees map onto the
  /// same labeled tree.
  std::map<VertexId, VertexId> relabeling;
};

/// AHU encoding rooted at the center; for two centers the smaller of the two
/// rooted codes is used.
CanonicalTree tree_canonical_form(const Graph& tree);

/// Applies a vertex bijection to every edge.
Hypergraph relabel(const Hypergraph& h, const std::map<VertexId, VertexId>& mapping);

/// All trees on n vertices up to isomorphism, each labeled canonically on
/// 1..n, sorted by canonical code.
std::vector<Graph> enumerate_trees(std::size_t n);

bool is_path_graph(const Graph& tree);
bool is_star_graph(const Graph& tree);

}  // namespace eihg
