#include "eihg/helly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace eihg {

namespace {

// Edges as bitsets over vertex positions.
class EdgeBits {
 public:
  explicit EdgeBits(const Hypergraph& h) : words_((h.vertex_count() + 63) / 64) {
    const auto& vs = h.vertices();
    for (const auto& e : h.edges()) {
      std::vector<std::uint64_t> bits(words_, 0);
      for (VertexId v : e) {
        auto pos = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        bits[pos / 64] |= std::uint64_t{1} << (pos % 64);
      }
      edges_.push_back(std::move(bits));
    }
  }

  std::size_t words() const { return words_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<std::uint64_t>& operator[](std::size_t i) const { return edges_[i]; }

  static bool meet(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
      if (a[w] & b[w]) return true;
    }
    return false;
  }

 private:
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> edges_;
};

}  // namespace

bool is_helly(const Hypergraph& h) {
  const auto& vs = h.vertices();
  const auto& es = h.edges();
  EdgeBits bits(h);
  auto has = [&](std::size_t edge, std::size_t pos) {
    return (bits[edge][pos / 64] >> (pos % 64)) & 1U;
  };
  std::vector<std::uint64_t> common(bits.words());
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      for (std::size_t c = b + 1; c < vs.size(); ++c) {
        bool any = false;
        for (std::size_t i = 0; i < es.size(); ++i) {
          if (has(i, a) + has(i, b) + has(i, c) < 2) continue;
          if (!any) {
            common = bits[i];
            any = true;
          } else {
            for (std::size_t w = 0; w < common.size(); ++w) common[w] &= bits[i][w];
          }
        }
        if (any && std::all_of(common.begin(), common.end(), [](auto w) { return w == 0; })) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_helly_bruteforce(const Hypergraph& h) {
  if (h.edge_count() > kMaxBruteforceEdges) {
    throw Error(ErrorKind::TooManyEdges, "brute-force Helly check is limited to " +
                                             std::to_string(kMaxBruteforceEdges) + " edges");
  }
  EdgeBits bits(h);
  const std::size_t m = bits.size();
  // Visit every pairwise-intersecting subfamily; `common` is the running
  // intersection of the chosen edges.
  std::vector<std::size_t> chosen;
  auto visit = [&](auto&& self, std::size_t next, const std::vector<std::uint64_t>& common) -> bool {
    for (std::size_t i = next; i < m; ++i) {
      bool pairwise = std::all_of(chosen.begin(), chosen.end(),
                                  [&](std::size_t j) { return EdgeBits::meet(bits[i], bits[j]); });
      if (!pairwise) continue;
      std::vector<std::uint64_t> narrowed = bits[i];
      if (!chosen.empty()) {
        for (std::size_t w = 0; w < narrowed.size(); ++w) narrowed[w] &= common[w];
      }
      if (std::all_of(narrowed.begin(), narrowed.end(), [](auto w) { return w == 0; })) return false;
      chosen.push_back(i);
      bool ok = self(self, i + 1, narrowed);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return visit(visit, 0, std::vector<std::uint64_t>(bits.words(), 0));
}

Hypergraph random_helly_hypergraph(std::mt19937_64& rng, const HellySampleOptions& opts) {
  std::uniform_int_distribution<std::size_t> nv(opts.min_vertices, opts.max_vertices);
  const std::size_t n = nv(rng);
  std::vector<VertexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), VertexId{1});
  std::uniform_int_distribution<std::size_t> size_dist(2, std::min<std::size_t>(4, n));
  std::uniform_int_distribution<VertexId> vertex_dist(1, static_cast<VertexId>(n));

  auto random_edge = [&](std::optional<VertexId> through) {
    Edge e;
    if (through) e.push_back(*through);
    const std::size_t want = size_dist(rng);
    while (e.size() < want) {
      VertexId v = vertex_dist(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    return e;
  };

  std::vector<Edge> edges;
  const VertexId kernel = vertex_dist(rng);
  const std::size_t star_edges = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t i = 0; i < star_edges; ++i) edges.push_back(random_edge(kernel));

  const std::size_t attempts = 3 * opts.max_edges;
  for (std::size_t t = 0; t < attempts; ++t) {
    auto probe = Hypergraph::make(vertices, edges);
    if (probe.edge_count() >= opts.max_edges) break;
    edges.push_back(random_edge(std::nullopt));
    if (!is_helly_bruteforce(Hypergraph::make(vertices, edges))) edges.pop_back();
  }
  Hypergraph h = Hypergraph::make(vertices, std::move(edges));
  if (!is_helly_bruteforce(h)) {
    throw Error(ErrorKind::InternalVerificationFailure, "sampled hypergraph is not Helly");
  }
  return h;
}

}  // namespace eihg
