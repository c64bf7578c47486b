#include "eihg/trees.hpp"

#include <algorithm>
#include <numeric>

namespace eihg {

namespace {

// Index-based adjacency for a graph; position i stands for vertices()[i].
struct Adjacency {
  std::vector<VertexId> labels;
  std::vector<std::vector<std::size_t>> next;

  explicit Adjacency(const Graph& g) : labels(g.vertices()), next(g.vertex_count()) {
    for (const auto& e : g.edges()) {
      auto a = index(e[0]);
      auto b = index(e[1]);
      next[a].push_back(b);
      next[b].push_back(a);
    }
    for (auto& n : next) std::sort(n.begin(), n.end());
  }

  std::size_t index(VertexId v) const {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  }
  std::size_t size() const { return labels.size(); }
  std::size_t degree(std::size_t i) const { return next[i].size(); }
};

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorKind::NotATree, "graph is not a tree");
}

std::vector<std::size_t> centers(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = adj.degree(i);
    if (deg[i] <= 1) layer.push_back(i);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next_layer;
    for (std::size_t leaf : layer) {
      for (std::size_t nb : adj.next[leaf]) {
        if (--deg[nb] == 1) next_layer.push_back(nb);
      }
    }
    layer = std::move(next_layer);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

struct RootedCodes {
  std::vector<std::string> code;
  std::vector<std::vector<std::size_t>> children;  // sorted by code
};

RootedCodes rooted_codes(const Adjacency& adj, std::size_t root) {
  const std::size_t n = adj.size();
  RootedCodes rc{std::vector<std::string>(n), std::vector<std::vector<std::size_t>>(n)};
  // Iterative DFS order so long paths do not hit the recursion limit.
  std::vector<std::size_t> order, parent(n, n), stack{root};
  std::vector<bool> seen(n, false);
  seen[root] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (std::size_t w : adj.next[v]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    auto& kids = rc.children[v];
    for (std::size_t w : adj.next[v]) {
      if (w != parent[v]) kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(),
              [&](std::size_t a, std::size_t b) { return rc.code[a] < rc.code[b]; });
    std::string c = "(";
    for (std::size_t w : kids) c += rc.code[w];
    c += ')';
    rc.code[v] = std::move(c);
  }
  return rc;
}

}  // namespace

bool is_tree(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() != n - 1) return false;
  Adjacency adj(g);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj.next[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<Leg> find_legs(const Graph& tree) {
  require_tree(tree);
  Adjacency adj(tree);
  std::vector<Leg> legs;
  for (std::size_t leaf = 0; leaf < adj.size(); ++leaf) {
    if (adj.degree(leaf) != 1) continue;
    std::vector<VertexId> walk{adj.labels[leaf]};
    std::size_t prev = leaf;
    std::size_t cur = adj.next[leaf][0];
    while (adj.degree(cur) == 2) {
      walk.push_back(adj.labels[cur]);
      std::size_t step = adj.next[cur][0] == prev ? adj.next[cur][1] : adj.next[cur][0];
      prev = cur;
      cur = step;
    }
    if (adj.degree(cur) < 3) continue;  // reached another leaf: the tree is a path
    walk.push_back(adj.labels[cur]);
    std::reverse(walk.begin(), walk.end());
    legs.push_back(Leg{std::move(walk)});
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

Graph delete_leg(const Graph& tree, const Leg& leg) {
  auto legs = find_legs(tree);
  if (std::find(legs.begin(), legs.end(), leg) == legs.end()) {
    throw Error(ErrorKind::NotALegOfThisTree, "the given path is not a leg of the tree");
  }
  std::vector<VertexId> dropped(leg.vertices.begin() + 1, leg.vertices.end());
  std::sort(dropped.begin(), dropped.end());
  auto gone = [&](VertexId v) { return std::binary_search(dropped.begin(), dropped.end(), v); };
  std::vector<VertexId> vertices;
  for (VertexId v : tree.vertices()) {
    if (!gone(v)) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : tree.edges()) {
    if (!gone(e[0]) && !gone(e[1])) edges.push_back(e);
  }
  return Graph(Hypergraph::make(std::move(vertices), std::move(edges)));
}

CanonicalTree tree_canonical_form(const Graph& tree) {
  require_tree(tree);
  Adjacency adj(tree);
  auto cs = centers(adj);
  RootedCodes best = rooted_codes(adj, cs[0]);
  std::size_t root = cs[0];
  if (cs.size() == 2) {
    RootedCodes other = rooted_codes(adj, cs[1]);
    if (other.code[cs[1]] < best.code[root]) {
      best = std::move(other);
      root = cs[1];
    }
  }
  CanonicalTree out;
  out.code = std::to_string(cs.size()) + ':' + best.code[root];
  // Preorder over code-sorted children.
  VertexId next_label = 1;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    out.relabeling.emplace(adj.labels[v], next_label++);
    const auto& kids = best.children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

Hypergraph relabel(const Hypergraph& h, const std::map<VertexId, VertexId>& mapping) {
  auto map_one = [&mapping](VertexId v) {
    auto it = mapping.find(v);
    if (it == mapping.end()) {
      throw Error(ErrorKind::UnknownVertex, "relabeling has no image for vertex " + std::to_string(v));
    }
    return it->second;
  };
  std::vector<VertexId> vertices;
  for (VertexId v : h.vertices()) vertices.push_back(map_one(v));
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (VertexId v : e) mapped.push_back(map_one(v));
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::make(std::move(vertices), std::move(edges));
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n == 0) return {};
  std::map<std::string, Graph> level;
  level.emplace("1:()", Graph(Hypergraph::on_range(1, {})));
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> grown;
    const auto fresh = static_cast<VertexId>(size);
    for (const auto& [code, t] : level) {
      for (VertexId v : t.vertices()) {
        std::vector<VertexId> vs = t.vertices();
        vs.push_back(fresh);
        std::vector<Edge> es = t.edges();
        es.push_back({v, fresh});
        Graph candidate(Hypergraph::make(std::move(vs), std::move(es)));
        auto canon = tree_canonical_form(candidate);
        if (!grown.contains(canon.code)) {
          grown.emplace(canon.code, Graph(relabel(candidate.hypergraph(), canon.relabeling)));
        }
      }
    }
    level = std::move(grown);
  }
  std::vector<Graph> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

bool is_path_graph(const Graph& tree) {
  if (!is_tree(tree)) return false;
  return std::all_of(tree.vertices().begin(), tree.vertices().end(),
                     [&](VertexId v) { return tree.degree(v) <= 2; });
}

bool is_star_graph(const Graph& tree) {
  if (!is_tree(tree) || tree.vertex_count() < 2) return false;
  return std::any_of(tree.vertices().begin(), tree.vertices().end(),
                     [&](VertexId v) { return tree.degree(v) + 1 == tree.vertex_count(); });
}

}  // namespace eihg
