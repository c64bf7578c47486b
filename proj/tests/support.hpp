#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eihg/hypergraph.hpp"
#include "eihg/text_format.hpp"

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<eihg::Hypergraph> {
  static String convert(const eihg::Hypergraph& h) { return ("\n" + eihg::render_hypergraph(h)).c_str(); }
};
}  // namespace doctest
#endif

namespace eihg::testing {

inline Hypergraph H(VertexId n, std::vector<Edge> edges) { return Hypergraph::on_range(n, std::move(edges)); }

inline std::vector<VertexId> range(VertexId n) {
  std::vector<VertexId> v;
  for (VertexId i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

// Edge-intersection straight from the definition, over std::set.
inline Hypergraph ei_oracle(const Hypergraph& h) {
  std::set<std::set<VertexId>> out;
  const auto& es = h.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i == j) continue;
      std::set<VertexId> common;
      for (VertexId v : es[i]) {
        if (std::find(es[j].begin(), es[j].end(), v) != es[j].end()) common.insert(v);
      }
      if (common.size() >= 2) out.insert(common);
    }
  }
  std::vector<Edge> edges;
  for (const auto& s : out) edges.emplace_back(s.begin(), s.end());
  return Hypergraph::make(h.vertices(), edges);
}

// Random hypergraph on 1..n with edges of size 2..max_size.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, VertexId n, std::size_t edges,
                                    std::size_t max_size) {
  std::vector<Edge> es;
  std::uniform_int_distribution<std::size_t> size(2, std::max<std::size_t>(2, std::min<std::size_t>(max_size, n)));
  auto vs = range(n);
  for (std::size_t i = 0; i < edges && n >= 2; ++i) {
    std::shuffle(vs.begin(), vs.end(), rng);
    Edge e(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(size(rng)));
    std::sort(e.begin(), e.end());
    es.push_back(e);
  }
  return H(n, es);
}

// Random linear hypergraph: edges are added only if they share <= 1 vertex
// with every earlier edge.
inline Hypergraph random_linear_hypergraph(std::mt19937_64& rng, VertexId n, std::size_t attempts) {
  std::vector<Edge> es;
  std::uniform_int_distribution<std::size_t> size(2, std::max<VertexId>(2, std::min<VertexId>(4, n - 1)));
  auto vs = range(n);
  for (std::size_t i = 0; i < attempts; ++i) {
    std::shuffle(vs.begin(), vs.end(), rng);
    Edge e(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(size(rng)));
    std::sort(e.begin(), e.end());
    bool ok = std::all_of(es.begin(), es.end(), [&](const Edge& f) { return intersection_size(e, f) <= 1; });
    if (ok) es.push_back(e);
  }
  return H(n, es);
}

inline Digraph random_digraph(std::mt19937_64& rng, VertexId n, double p) {
  std::bernoulli_distribution arc(p);
  std::vector<Digraph::Arc> arcs;
  for (VertexId a = 1; a <= n; ++a)
    for (VertexId b = 1; b <= n; ++b)
      if (a != b && arc(rng)) arcs.emplace_back(a, b);
  return Digraph::make(range(n), arcs);
}

// Tree from a Prüfer sequence over 1..n.
inline Graph prufer_tree(const std::vector<VertexId>& seq, VertexId n) {
  std::vector<int> deg(n + 1, 1);
  for (VertexId v : seq) ++deg[v];
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : seq) {
    for (VertexId leaf = 1; leaf <= n; ++leaf) {
      if (deg[leaf] == 1) {
        edges.emplace_back(leaf, v);
        --deg[leaf];
        --deg[v];
        break;
      }
    }
  }
  VertexId a = 0;
  for (VertexId v = 1; v <= n; ++v) {
    if (deg[v] == 1) {
      if (a == 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return Graph::make(range(n), edges);
}

// Every labeled tree on 1..n (n^(n-2) of them), via Prüfer sequences.
inline std::vector<Graph> all_labeled_trees(VertexId n) {
  if (n == 1) return {Graph::make({1}, {})};
  if (n == 2) return {Graph::make({1, 2}, {{1, 2}})};
  std::vector<Graph> out;
  std::vector<VertexId> seq(n - 2, 1);
  while (true) {
    out.push_back(prufer_tree(seq, n));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n) seq[i++] = 1;
    if (i == seq.size()) break;
    ++seq[i];
  }
  return out;
}

// Isomorphism invariant independent of the library's canonical form: for
// each vertex the sorted (distance, degree) profile of the whole tree.
inline std::string tree_signature(const Graph& g) {
  std::vector<std::string> parts;
  for (VertexId v : g.vertices()) {
    std::map<VertexId, int> dist{{v, 0}};
    std::vector<VertexId> queue{v};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (VertexId w : g.neighbors(queue[i])) {
        if (dist.emplace(w, dist[queue[i]] + 1).second) queue.push_back(w);
      }
    }
    std::vector<std::pair<int, std::size_t>> prof;
    for (auto [w, d] : dist) prof.emplace_back(d, g.degree(w));
    std::sort(prof.begin(), prof.end());
    std::string s;
    for (auto [d, k] : prof) s += std::to_string(d) + "." + std::to_string(k) + ",";
    parts.push_back(s);
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) out += p + "|";
  return out;
}

}  // namespace eihg::testing
