#pragma once

#include <optional>
#include <string_view>

#include "eihg/hypergraph.hpp"
#include "eihg/laws.hpp"

namespace eihg {

/// Hypergraphs read off the neighborhoods of a digraph. Only sets with at
/// least two vertices become edges.
enum class NeighborhoodKind {
  Competition,        // N^-(v)
  CommonEnemy,        // N^+(v)
  DoubleCompetition,  // N^+(v1) ∩ N^-(v2)
  Niche,              // N^-(v) or N^+(v)
  HPrime,             // sets that are both some N^-(v1) and some N^+(v2)
};

std::string_view to_string(NeighborhoodKind kind);
std::optional<NeighborhoodKind> neighborhood_kind_from_string(std::string_view name);

Hypergraph neighborhood_hypergraph(const Digraph& d, NeighborhoodKind kind);

/// Evaluates both sides of
///   EI(niche) ∪ H'  ==  double-competition ∪ EI(competition) ∪ EI(common-enemy)
/// `predicted` holds the right-hand side, `computed` the left-hand side.
LawReport check_competition_identity(const Digraph& d);

}  // namespace eihg
