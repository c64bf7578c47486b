#include <random>

#include "doctest.h"
#include "eihg/ei.hpp"
#include "eihg/error.hpp"
#include "eihg/generators.hpp"
#include "support.hpp"

using namespace eihg;
using eihg::testing::H;

TEST_CASE("ei examples") {
  CHECK(ei(H(4, {{1, 2, 3}, {2, 3, 4}})) == H(4, {{2, 3}}));
  CHECK(ei(hypercycle(10, 4)) == hypergraph_union(hypercycle(10, 3), hypercycle(10, 2)));
  CHECK(ei(H(6, {{1, 2, 3}, {1, 2, 5}, {2, 3, 4}, {3, 4, 5}, {3, 4, 6}, {4, 5, 6}})) ==
        H(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}));
  CHECK(ei(H(5, {{1, 2, 3, 4}})) == H(5, {}));
}

TEST_CASE("ei agrees with the set-based oracle") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 400; ++i) {
    VertexId n = std::uniform_int_distribution<VertexId>(2, 9)(rng);
    auto h = eihg::testing::random_hypergraph(rng, n, i % 12, 6);
    auto got = ei(h);
    CHECK(got == eihg::testing::ei_oracle(h));
    CHECK(got.vertices() == h.vertices());
    if (h.edge_count() > 0) CHECK(got.max_edge_size() < h.max_edge_size());
  }
}

TEST_CASE("ei is monotone under adding edges") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    auto h = eihg::testing::random_hypergraph(rng, 7, 5, 5);
    auto extra = eihg::testing::random_hypergraph(rng, 7, 2, 5);
    auto big = ei(hypergraph_union(h, extra));
    auto small = ei(h);
    for (const auto& e : small.edges()) CHECK(big.has_edge(e));
  }
}

TEST_CASE("iteration") {
  CHECK(ei_iterate(hypercycle(10, 4), 2) == hypercycle(10, 2));
  auto h = H(4, {{1, 2, 3}, {2, 3, 4}});
  CHECK(ei_iterate(h, 0) == h);
  // EI^2 of the 5-uniform hyperpath on 7 vertices is the single edge 345;
  // one more step leaves nothing.
  CHECK(ei_iterate(hyperpath(7, 5), 2) == H(7, {{3, 4, 5}}));
  CHECK(ei_iterate(hyperpath(7, 5), 3) == H(7, {}));
}

TEST_CASE("ei number") {
  CHECK(ei_number(H(4, {})) == 0);
  CHECK(ei_number(hypercycle(9, 4)) == 3);
  CHECK(ei_number(hyperpath(7, 5)) == 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto h = eihg::testing::random_hypergraph(rng, 8, 6, 6);
    std::size_t k = ei_number(h);
    CHECK(ei_iterate(h, k).edge_count() == 0);
    if (k > 0) CHECK(ei_iterate(h, k - 1).edge_count() > 0);
    if (h.edge_count() > 0) CHECK(k <= h.max_edge_size() - 1);
  }
}

TEST_CASE("necessary condition") {
  CHECK_FALSE(satisfies_necessary_condition(H(4, {{1, 2, 3}, {2, 3, 4}})));
  CHECK(satisfies_necessary_condition(H(4, {{1, 2, 3}, {2, 3, 4}, {1, 2, 3, 4}})));
  CHECK(satisfies_necessary_condition(H(4, {})));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    VertexId n = std::uniform_int_distribution<VertexId>(3, 9)(rng);
    CHECK(satisfies_necessary_condition(ei(eihg::testing::random_hypergraph(rng, n, 2 + i % 9, 6))));
  }
}

TEST_CASE("linear augmentation") {
  auto h = H(4, {{1, 2}, {3, 4}});
  auto aug = augment_linear(h);
  CHECK(aug == H(4, {{1, 2}, {3, 4}, {1, 2, 3, 4}}));
  CHECK(ei(aug) == h);

  CHECK(augment_linear(H(3, {})) == H(3, {{1, 2, 3}}));
  CHECK(ei(augment_linear(H(3, {}))) == H(3, {}));

  auto kind_of = [](const Hypergraph& g) {
    try {
      augment_linear(g);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of(H(4, {{1, 2, 3}, {2, 3, 4}})) == ErrorKind::NotLinear);
  CHECK(kind_of(H(3, {{1, 2, 3}})) == ErrorKind::FullVertexSetAlreadyEdge);
  CHECK(kind_of(H(1, {})) == ErrorKind::TooFewVertices);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    VertexId n = std::uniform_int_distribution<VertexId>(3, 10)(rng);
    auto lin = eihg::testing::random_linear_hypergraph(rng, n, 6);
    if (lin.has_edge(lin.vertices())) continue;
    CHECK(ei(augment_linear(lin)) == lin);
  }
}
