#include "doctest.h"
#include "eihg/ei.hpp"
#include "eihg/error.hpp"
#include "eihg/generators.hpp"
#include "eihg/trees.hpp"
#include "support.hpp"

using namespace eihg;
using eihg::testing::H;

TEST_CASE("families") {
  auto c = hypercycle(10, 4);
  CHECK(c.edge_count() == 10);
  CHECK(is_k_uniform(c, 4));
  CHECK(hyperpath(7, 5) == H(7, {{1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {3, 4, 5, 6, 7}}));
  CHECK(complete_uniform(4, 3) == H(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  CHECK(star_graph(3).hypergraph() == H(4, {{1, 2}, {1, 3}, {1, 4}}));
  CHECK(cycle_graph(5).hypergraph() == hypercycle(5, 2));
  CHECK(path_graph(4).hypergraph() == hyperpath(4, 2));
  CHECK(generate({Family::Hypercycle, 10, 4}) == c);
  CHECK(family_from_string("complete") == Family::CompleteUniform);
  CHECK_FALSE(family_from_string("wheel").has_value());
  CHECK_THROWS_AS(hypercycle(3, 4), Error);
}

TEST_CASE("catalog trees") {
  CHECK(catalog_tree(12).hypergraph() == H(6, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}));
  CHECK(catalog_tree(27).hypergraph() ==
        H(8, {{1, 7}, {1, 8}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7}}));
  CHECK(catalog_tree(7).hypergraph() == H(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}}));
  CHECK_THROWS_AS(catalog_tree(999), Error);
}

TEST_CASE("the 5-vertex tree that is neither a path nor a star is unique") {
  std::set<std::string> others;
  for (const auto& t : eihg::testing::all_labeled_trees(5)) {
    if (!is_path_graph(t) && !is_star_graph(t)) others.insert(eihg::testing::tree_signature(t));
  }
  REQUIRE(others.size() == 1);
  CHECK(*others.begin() == eihg::testing::tree_signature(catalog_tree(7)));
}

TEST_CASE("catalog realizations") {
  CHECK(catalog_realization(10) == H(6, {{1, 2, 3}, {1, 2, 4}, {2, 3, 5}, {2, 3, 6}, {3, 4, 5}, {3, 4, 6}}));
  CHECK(path_realization(7) ==
        H(7, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {1, 2, 5}, {3, 6, 7}}));
  CHECK_THROWS_AS(catalog_realization(12), UnrealizableTree);
  try {
    catalog_realization(12);
  } catch (const UnrealizableTree& e) {
    CHECK(e.kind() == ErrorKind::KnownUnrealizable);
    CHECK(e.catalog_id() == 12);
  }
  CHECK(catalog_realization_ids().size() == 33);
  for (int id : catalog_realization_ids()) {
    CHECK(ei(catalog_realization(id)) == catalog_tree(id).hypergraph());
  }
}

TEST_CASE("direct constructions") {
  for (std::size_t n = 3; n <= 50; ++n) {
    auto w = star_realization(n);
    CHECK(is_k_uniform(w, 3));
    CHECK(w.edge_count() == n);
    CHECK(ei(w) == star_graph(n).hypergraph());
  }
  CHECK(ei(path_realization(1)) == path_graph(1).hypergraph());
  for (std::size_t n = 7; n <= 50; ++n) {
    auto w = path_realization(n);
    CHECK(is_k_uniform(w, 3));
    CHECK(w.edge_count() == n);
    CHECK(ei(w) == path_graph(n).hypergraph());
  }
  CHECK_THROWS_AS(path_realization(5), Error);
}

TEST_CASE("exceptional list") {
  CHECK(exceptional_trees().size() == 7);
  for (const auto& ex : exceptional_trees()) CHECK_NOTHROW(catalog_tree(ex.id));
}
