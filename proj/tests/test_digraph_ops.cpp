#include <random>

#include "doctest.h"
#include "eihg/digraph_ops.hpp"
#include "eihg/ei.hpp"
#include "support.hpp"

using namespace eihg;
using eihg::testing::H;

namespace {
Hypergraph nh(const Digraph& d, NeighborhoodKind k) { return neighborhood_hypergraph(d, k); }
}  // namespace

TEST_CASE("neighborhood examples") {
  auto d = Digraph::make({1, 2, 3, 5}, {{1, 2}, {1, 3}, {2, 5}, {3, 5}});
  auto expect = Hypergraph::make({1, 2, 3, 5}, {{2, 3}});
  for (auto k : {NeighborhoodKind::Competition, NeighborhoodKind::CommonEnemy, NeighborhoodKind::DoubleCompetition,
                 NeighborhoodKind::Niche, NeighborhoodKind::HPrime}) {
    CHECK(nh(d, k) == expect);
  }
  auto r = check_competition_identity(d);
  CHECK(r.agrees);
  CHECK(std::get<Hypergraph>(r.computed) == expect);

  auto empty = Digraph::make({1, 2, 3}, {});
  CHECK(nh(empty, NeighborhoodKind::Niche) == H(3, {}));
  CHECK(check_competition_identity(empty).agrees);

  auto two = Digraph::make({1, 2, 3}, {{1, 3}, {2, 3}});
  CHECK(nh(two, NeighborhoodKind::Competition) == H(3, {{1, 2}}));
  CHECK(nh(two, NeighborhoodKind::CommonEnemy) == H(3, {}));
}

TEST_CASE("neighborhood kinds relate as sets") {
  std::mt19937_64 rng(21);
  const double probs[] = {0.1, 0.3, 0.5};
  for (int i = 0; i < 300; ++i) {
    VertexId n = std::uniform_int_distribution<VertexId>(1, 8)(rng);
    auto d = eihg::testing::random_digraph(rng, n, probs[i % 3]);
    auto c = nh(d, NeighborhoodKind::Competition);
    auto ce = nh(d, NeighborhoodKind::CommonEnemy);
    auto dc = nh(d, NeighborhoodKind::DoubleCompetition);
    auto hp = nh(d, NeighborhoodKind::HPrime);
    CHECK(nh(d, NeighborhoodKind::Niche) == hypergraph_union(c, ce));
    for (const auto& e : hp.edges()) {
      CHECK(dc.has_edge(e));
      CHECK(c.has_edge(e));
      CHECK(ce.has_edge(e));
    }
    // Both sides built here from the oracle ei.
    auto lhs = hypergraph_union(eihg::testing::ei_oracle(hypergraph_union(c, ce)), hp);
    auto rhs = hypergraph_union(dc, hypergraph_union(eihg::testing::ei_oracle(c), eihg::testing::ei_oracle(ce)));
    CHECK(lhs == rhs);
    auto r = check_competition_identity(d);
    CHECK(r.agrees);
    CHECK(std::get<Hypergraph>(r.computed) == lhs);
  }
}

TEST_CASE("kind names") {
  CHECK(neighborhood_kind_from_string("h-prime") == NeighborhoodKind::HPrime);
  CHECK_FALSE(neighborhood_kind_from_string("bogus").has_value());
}
