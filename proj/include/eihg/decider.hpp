#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eihg/hypergraph.hpp"

namespace eihg {

enum class Verdict { Realizable, Unrealizable };

/// Result of asking whether a graph is EI(H) for a 3-uniform H on its vertex
/// set. A realizable outcome carries the lexicographically least witness
/// (hyperedges compared as sorted label lists, families as sorted sequences).
struct DecisionOutcome {
  Verdict verdict = Verdict::Unrealizable;
  std::optional<Hypergraph> witness;
  std::uint64_t explored = 0;     // search nodes, or subsets for the exhaustive oracle
  std::size_t useful_count = 0;   // size of the candidate pool
};

struct DecideOptions {
  std::size_t max_vertices = 10;
  std::uint64_t node_budget = 0;  // 0 = unlimited; exceeding it throws BudgetExhausted
};

/// 3-subsets of V(g) that contain at least one edge of g, in lexicographic
/// order. Any valid witness stays valid after dropping the other triples.
std::vector<Edge> useful_hyperedges(const Graph& g);

/// Backtracking search over the useful hyperedges.
///
/// A set S of triples is a witness iff (a) two members of S never meet in a
/// pair that is not an edge of g and (b) every edge of g is the intersection
/// of at least two members of S. Branching picks the unsatisfied edge with
/// the fewest open candidates; an edge whose open candidates are exactly the
/// ones it still needs forces them in.
DecisionOutcome decide_3uniform(const Graph& g, const DecideOptions& options = {});

/// Independent oracle: tries every family of 3-subsets of V(g), not only the
/// useful ones. Limited to graphs with at most `kMaxExhaustiveVertices`.
DecisionOutcome decide_exhaustive(const Graph& g);
inline constexpr std::size_t kMaxExhaustiveVertices = 6;

}  // namespace eihg
