#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eihg/hypergraph.hpp"

namespace eihg {

enum class Family { Hypercycle, Hyperpath, CompleteUniform, Path, Cycle, Star };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Parameters of a generated family. `d` is the uniformity and is ignored for
/// the graph families. For `Star`, `n` is the number of leaves.
struct FamilySpec {
  Family family;
  std::size_t n;
  std::size_t d = 2;
};

/// Vertex v_i is labeled i throughout.
///   Hypercycle  n windows {i, ..., i+d-1} taken cyclically   (2 <= d <= n)
///   Hyperpath   n-d+1 windows {i, ..., i+d-1}                 (2 <= d <= n)
///   CompleteUniform  all d-subsets of {1..n}                  (2 <= d <= n)
///   Path        P_n on n >= 1 vertices
///   Cycle       C_n, n >= 3
///   Star        K_{1,n}: center 1, leaves 2..n+1, n >= 1
Hypergraph generate(const FamilySpec& spec);

Hypergraph hypercycle(std::size_t n, std::size_t d);
Hypergraph hyperpath(std::size_t n, std::size_t d);
Hypergraph complete_uniform(std::size_t n, std::size_t d);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

// 3-uniform preimages of stars and paths.
//
// Star with n >= 3 leaves: {1, i, i+1} for i = 2..n and {1, n+1, 2}.
// Path with n = 1 or n >= 7 vertices: consecutive triples {i, i+1, i+2}
// plus {1, 2, n-2} and {n-1, n, 3}; the single vertex gets no edges.
Hypergraph star_realization(std::size_t leaves);
Hypergraph path_realization(std::size_t n);

// Catalog of labeled trees on at most eight vertices (atlas numbering T1..T48).

/// Edge set of T<id>. Throws `UnknownCatalogId` for ids outside 1..48 and for
/// T15, T25, T26, T48, whose path/star assignment is not fixed by the data.
Graph catalog_tree(int id);

/// 3-uniform hypergraph whose EI is `catalog_tree(id)`. Catalog ids come from
/// the shipped fixture table; stars and the single vertex use
/// `star_realization` / `path_realization`. Throws `UnrealizableTree` for the
/// seven exceptions and `NotInCatalog` otherwise.
Hypergraph catalog_realization(int id);

/// Ids carrying a stored realization, ascending.
const std::vector<int>& catalog_realization_ids();

/// Ids (ascending) of the trees without a 3-uniform preimage, with names.
struct ExceptionalTree {
  int id;
  std::string_view name;
};
const std::vector<ExceptionalTree>& exceptional_trees();

/// Raw text of the shipped fixture catalog.
std::string_view catalog_text();

}  // namespace eihg
