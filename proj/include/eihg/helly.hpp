#pragma once

#include <cstddef>
#include <random>

#include "eihg/hypergraph.hpp"

namespace eihg {

/// Helly property via the vertex-triple criterion: for every three vertices,
/// the edges containing at least two of them share a vertex.
/// O(|V|^3 |E|) time.
bool is_helly(const Hypergraph& h);

/// Definitional check over all pairwise-intersecting subfamilies.
/// Throws `TooManyEdges` above `kMaxBruteforceEdges` edges.
bool is_helly_bruteforce(const Hypergraph& h);
inline constexpr std::size_t kMaxBruteforceEdges = 20;

struct HellySampleOptions {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 9;
  std::size_t max_edges = 10;
};

/// Random Helly hypergraph: a few edges through one kernel vertex, then random
/// edges kept only if the brute-force oracle still accepts the family.
Hypergraph random_helly_hypergraph(std::mt19937_64& rng, const HellySampleOptions& opts = {});

}  // namespace eihg
