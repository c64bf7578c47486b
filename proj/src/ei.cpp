#include "eihg/ei.hpp"

#include <string>

namespace eihg {

Hypergraph ei(const Hypergraph& h) {
  const auto& es = h.edges();
  HypergraphBuilder builder(h.vertices());
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      Edge common = intersect(es[i], es[j]);
      if (common.size() >= 2) builder.add(std::move(common));
    }
  }
  return std::move(builder).build();
}

Hypergraph ei_iterate(const Hypergraph& h, std::size_t k) {
  Hypergraph cur = h;
  for (std::size_t i = 0; i < k && cur.edge_count() > 0; ++i) cur = ei(cur);
  return cur;
}

std::size_t ei_number(const Hypergraph& h) {
  std::size_t k = 0;
  Hypergraph cur = h;
  while (cur.edge_count() > 0) {
    Hypergraph next = ei(cur);
    if (next.edge_count() > 0 && next.max_edge_size() >= cur.max_edge_size()) {
      throw Error(ErrorKind::InternalVerificationFailure,
                  "maximum edge size did not drop under ei at step " + std::to_string(k));
    }
    cur = std::move(next);
    ++k;
  }
  return k;
}

bool satisfies_necessary_condition(const Hypergraph& h) {
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      Edge common = intersect(es[i], es[j]);
      if (common.size() < 2) continue;
      if (common.size() == es[i].size() || common.size() == es[j].size()) continue;  // nested
      bool covered = false;
      for (std::size_t t = 0; t < es.size() && !covered; ++t) {
        covered = t != i && t != j && is_subset(common, es[t]);
      }
      if (!covered) return false;
    }
  }
  return true;
}

Hypergraph augment_linear(const Hypergraph& h) {
  if (h.vertex_count() < 2) {
    throw Error(ErrorKind::TooFewVertices, "need at least two vertices to add the full vertex set");
  }
  if (!is_linear(h)) throw Error(ErrorKind::NotLinear, "hypergraph is not linear");
  if (h.has_edge(h.vertices())) {
    throw Error(ErrorKind::FullVertexSetAlreadyEdge, "the full vertex set is already an edge");
  }
  std::vector<Edge> edges = h.edges();
  edges.push_back(h.vertices());
  Hypergraph out = Hypergraph::make(h.vertices(), std::move(edges));
  if (ei(out) != h) {
    throw Error(ErrorKind::InternalVerificationFailure, "ei of the augmented hypergraph differs");
  }
  return out;
}

}  // namespace eihg
