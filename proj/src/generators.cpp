#include "eihg/generators.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "eihg/ei.hpp"
#include "eihg/text_format.hpp"

namespace eihg {

namespace detail {
extern const char* const kCatalogText;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Hypercycle: return "hypercycle";
    case Family::Hyperpath: return "hyperpath";
    case Family::CompleteUniform: return "complete";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (Family f : {Family::Hypercycle, Family::Hyperpath, Family::CompleteUniform, Family::Path,
                   Family::Cycle, Family::Star}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

VertexId label(std::size_t i) { return static_cast<VertexId>(i); }

void require_uniformity(std::size_t n, std::size_t d, std::string_view what) {
  if (d < 2 || d > n) {
    throw Error(ErrorKind::InvalidSpec,
                std::string(what) + " needs 2 <= d <= n (n=" + std::to_string(n) +
                    ", d=" + std::to_string(d) + ")");
  }
}

Edge window(std::size_t start, std::size_t d, std::size_t n) {
  Edge e;
  for (std::size_t j = 0; j < d; ++j) e.push_back(label((start - 1 + j) % n + 1));
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

Hypergraph hypercycle(std::size_t n, std::size_t d) {
  require_uniformity(n, d, "hypercycle");
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) es.push_back(window(i, d, n));
  return Hypergraph::on_range(label(n), std::move(es));
}

Hypergraph hyperpath(std::size_t n, std::size_t d) {
  require_uniformity(n, d, "hyperpath");
  std::vector<Edge> es;
  for (std::size_t i = 1; i + d - 1 <= n; ++i) es.push_back(window(i, d, n));
  return Hypergraph::on_range(label(n), std::move(es));
}

Hypergraph complete_uniform(std::size_t n, std::size_t d) {
  require_uniformity(n, d, "complete uniform hypergraph");
  std::vector<Edge> es;
  Edge cur;
  // Lexicographic d-subsets of {1..n}.
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == d) {
      es.push_back(cur);
      return;
    }
    for (std::size_t v = next; v + (d - cur.size()) <= n + 1; ++v) {
      cur.push_back(label(v));
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return Hypergraph::on_range(label(n), std::move(es));
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "a path needs at least one vertex");
  std::vector<Edge> es;
  for (std::size_t i = 1; i < n; ++i) es.push_back({label(i), label(i + 1)});
  return Graph(Hypergraph::on_range(label(n), std::move(es)));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidSpec, "a cycle needs at least three vertices");
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= n; ++i) es.push_back(window(i, 2, n));
  return Graph(Hypergraph::on_range(label(n), std::move(es)));
}

Graph star_graph(std::size_t leaves) {
  if (leaves < 1) throw Error(ErrorKind::InvalidSpec, "a star needs at least one leaf");
  std::vector<Edge> es;
  for (std::size_t i = 2; i <= leaves + 1; ++i) es.push_back({1, label(i)});
  return Graph(Hypergraph::on_range(label(leaves + 1), std::move(es)));
}

Hypergraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Hypercycle: return hypercycle(spec.n, spec.d);
    case Family::Hyperpath: return hyperpath(spec.n, spec.d);
    case Family::CompleteUniform: return complete_uniform(spec.n, spec.d);
    case Family::Path: return path_graph(spec.n).hypergraph();
    case Family::Cycle: return cycle_graph(spec.n).hypergraph();
    case Family::Star: return star_graph(spec.n).hypergraph();
  }
  throw Error(ErrorKind::InvalidSpec, "unknown family");
}

Hypergraph star_realization(std::size_t leaves) {
  if (leaves < 3) {
    throw Error(ErrorKind::InvalidSpec, "star realization needs at least three leaves");
  }
  const std::size_t n = leaves;
  std::vector<Edge> es;
  for (std::size_t i = 2; i <= n; ++i) es.push_back({1, label(i), label(i + 1)});
  es.push_back({1, 2, label(n + 1)});
  return Hypergraph::on_range(label(n + 1), std::move(es));
}

Hypergraph path_realization(std::size_t n) {
  if (n == 1) return Hypergraph::on_range(1, {});
  if (n < 7) {
    throw Error(ErrorKind::InvalidSpec, "path realization exists only for n = 1 and n >= 7");
  }
  std::vector<Edge> es;
  for (std::size_t i = 1; i + 2 <= n; ++i) es.push_back({label(i), label(i + 1), label(i + 2)});
  es.push_back({1, 2, label(n - 2)});
  es.push_back({3, label(n - 1), label(n)});
  return Hypergraph::on_range(label(n), std::move(es));
}

// --- catalog ---------------------------------------------------------------

namespace {

struct Catalog {
  std::map<int, Graph> trees;
  std::map<int, Hypergraph> realizations;
  std::vector<int> realization_ids;
};

int parse_id(const std::string& name) {
  if (name.size() < 2 || name[0] != 'T') {
    throw Error(ErrorKind::ParseError, "catalog record name must look like T<id>: " + name);
  }
  return std::stoi(name.substr(1));
}

const Catalog& catalog() {
  static const Catalog cat = [] {
    Catalog c;
    for (auto& rec : parse_fixture_records(detail::kCatalogText)) {
      int id = parse_id(rec.name);
      if (rec.kind == "tree") {
        c.trees.emplace(id, Graph(std::move(rec.hypergraph)));
      } else if (rec.kind == "realization") {
        c.realizations.emplace(id, std::move(rec.hypergraph));
        c.realization_ids.push_back(id);
      } else {
        throw Error(ErrorKind::ParseError, "unknown catalog record kind: " + rec.kind);
      }
    }
    std::sort(c.realization_ids.begin(), c.realization_ids.end());
    return c;
  }();
  return cat;
}

}  // namespace

const std::vector<ExceptionalTree>& exceptional_trees() {
  static const std::vector<ExceptionalTree> list = {
      {2, "P2"}, {3, "P3"}, {5, "P4"}, {7, "T7"}, {8, "P5"}, {12, "T12"}, {14, "P6"}};
  return list;
}

std::string_view catalog_text() { return detail::kCatalogText; }

Graph catalog_tree(int id) {
  const auto& c = catalog();
  if (auto it = c.trees.find(id); it != c.trees.end()) return it->second;
  throw Error(ErrorKind::UnknownCatalogId, "no labeled tree is stored for T" + std::to_string(id));
}

Hypergraph catalog_realization(int id) {
  for (const auto& ex : exceptional_trees()) {
    if (ex.id == id) throw UnrealizableTree(ex.id, std::string(ex.name));
  }
  const auto& c = catalog();
  Hypergraph h;
  if (auto it = c.realizations.find(id); it != c.realizations.end()) {
    h = it->second;
  } else if (id == 1) {
    h = path_realization(1);
  } else if (auto t = c.trees.find(id); t != c.trees.end()) {
    // Remaining stored trees without a table entry are the stars T4, T6, T9.
    const Graph& tree = t->second;
    if (tree.degree(1) + 1 != tree.vertex_count()) {
      throw Error(ErrorKind::NotInCatalog, "T" + std::to_string(id) + " has no stored realization");
    }
    h = star_realization(tree.vertex_count() - 1);
  } else {
    throw Error(ErrorKind::NotInCatalog, "T" + std::to_string(id) + " is not in the catalog");
  }
  if (ei(h) != catalog_tree(id).hypergraph() || !is_k_uniform(h, 3)) {
    throw Error(ErrorKind::InternalVerificationFailure,
                "catalog realization of T" + std::to_string(id) + " does not reproduce the tree");
  }
  return h;
}

const std::vector<int>& catalog_realization_ids() { return catalog().realization_ids; }

}  // namespace eihg
