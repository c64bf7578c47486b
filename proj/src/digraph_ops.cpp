#include "eihg/digraph_ops.hpp"

#include <algorithm>

#include "eihg/ei.hpp"

namespace eihg {

std::string_view to_string(NeighborhoodKind kind) {
  switch (kind) {
    case NeighborhoodKind::Competition: return "competition";
    case NeighborhoodKind::CommonEnemy: return "common-enemy";
    case NeighborhoodKind::DoubleCompetition: return "double-competition";
    case NeighborhoodKind::Niche: return "niche";
    case NeighborhoodKind::HPrime: return "h-prime";
  }
  return "?";
}

std::optional<NeighborhoodKind> neighborhood_kind_from_string(std::string_view name) {
  for (auto k : {NeighborhoodKind::Competition, NeighborhoodKind::CommonEnemy,
                 NeighborhoodKind::DoubleCompetition, NeighborhoodKind::Niche,
                 NeighborhoodKind::HPrime}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Hypergraph neighborhood_hypergraph(const Digraph& d, NeighborhoodKind kind) {
  std::vector<Edge> in, out;
  for (VertexId v : d.vertices()) {
    in.push_back(d.in_neighbors(v));
    out.push_back(d.out_neighbors(v));
  }
  HypergraphBuilder builder(d.vertices());
  auto keep = [&builder](Edge e) {
    if (e.size() >= 2) builder.add(std::move(e));
  };
  switch (kind) {
    case NeighborhoodKind::Competition:
      for (auto& e : in) keep(e);
      break;
    case NeighborhoodKind::CommonEnemy:
      for (auto& e : out) keep(e);
      break;
    case NeighborhoodKind::Niche:
      for (auto& e : in) keep(e);
      for (auto& e : out) keep(e);
      break;
    case NeighborhoodKind::DoubleCompetition:
      for (const auto& o : out)
        for (const auto& i : in) keep(intersect(o, i));
      break;
    case NeighborhoodKind::HPrime:
      for (const auto& i : in) {
        if (i.size() >= 2 && std::find(out.begin(), out.end(), i) != out.end()) keep(i);
      }
      break;
  }
  return std::move(builder).build();
}

LawReport check_competition_identity(const Digraph& d) {
  auto nh = [&d](NeighborhoodKind k) { return neighborhood_hypergraph(d, k); };
  Hypergraph lhs = hypergraph_union(ei(nh(NeighborhoodKind::Niche)), nh(NeighborhoodKind::HPrime));
  Hypergraph rhs = hypergraph_union(
      hypergraph_union(nh(NeighborhoodKind::DoubleCompetition), ei(nh(NeighborhoodKind::Competition))),
      ei(nh(NeighborhoodKind::CommonEnemy)));
  LawReport r{LawId::CompetitionIdentity, {d.vertices().size(), 0, 0}, rhs, lhs, false};
  r.agrees = lhs == rhs;
  return r;
}

}  // namespace eihg
