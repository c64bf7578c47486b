#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "eihg/hypergraph.hpp"
#include "eihg/trees.hpp"

namespace eihg {

/// A 3-uniform hypergraph whose EI is `target`.
struct RealizationCertificate {
  Graph target;
  Hypergraph witness;
  bool verified = false;
  /// Closing-triple candidates rejected during leg re-attachment, summed over
  /// the whole recursion.
  std::size_t backtracks = 0;
  /// Set when a small tree matched no stored fixture and the decider was used.
  bool used_search_fallback = false;
};

/// If `tree` is one of the seven exceptional trees, its catalog id and name.
struct ExceptionMatch {
  int id;
  std::string name;
};
std::optional<ExceptionMatch> match_exceptional_tree(const Graph& tree);

/// Builds and verifies a 3-uniform preimage of a tree.
///
/// Paths and stars use the direct constructions, other trees with at most
/// eight vertices reuse the catalog fixtures after canonical relabeling, and
/// larger trees strip a shortest leg, realize the rest and re-attach the leg
/// with two (length 1) or s+1 (length s >= 2) new triples.
///
/// Throws `UnrealizableTree` for the exceptions and `NotATree` for non-trees.
RealizationCertificate realize_tree(const Graph& tree);

}  // namespace eihg
