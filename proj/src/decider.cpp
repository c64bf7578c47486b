#include "eihg/decider.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "eihg/ei.hpp"

namespace eihg {

namespace {

using Mask = std::uint64_t;

// Vertex positions 0..n-1 stand for g.vertices()[i].
struct Indexed {
  std::vector<VertexId> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // positions, a < b
  std::vector<std::vector<int>> edge_id;                   // n x n, -1 if no edge

  explicit Indexed(const Graph& g) : labels(g.vertices()) {
    const std::size_t n = labels.size();
    edge_id.assign(n, std::vector<int>(n, -1));
    for (const auto& e : g.edges()) {
      auto a = pos(e[0]);
      auto b = pos(e[1]);
      edge_id[a][b] = edge_id[b][a] = static_cast<int>(edges.size());
      edges.emplace_back(a, b);
    }
  }

  std::size_t pos(VertexId v) const {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  }

  Edge to_edge(Mask m) const {
    Edge e;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if ((m >> i) & 1U) e.push_back(labels[i]);
    }
    return e;
  }
};

Mask bit(std::size_t i) { return Mask{1} << i; }

// All 3-subsets of positions, lexicographic by label (positions are sorted
// like labels).
std::vector<Mask> all_triples(std::size_t n) {
  std::vector<Mask> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) out.push_back(bit(a) | bit(b) | bit(c));
  return out;
}

// Edge id of the 2-set m, or -1 if it is not an edge.
int pair_edge(const Indexed& ix, Mask m) {
  auto a = static_cast<std::size_t>(std::countr_zero(m));
  auto b = static_cast<std::size_t>(63 - std::countl_zero(m));
  return ix.edge_id[a][b];
}

std::vector<Mask> useful_masks(const Indexed& ix) {
  std::vector<Mask> out;
  for (Mask t : all_triples(ix.labels.size())) {
    bool useful = std::any_of(ix.edges.begin(), ix.edges.end(), [t](const auto& e) {
      Mask em = bit(e.first) | bit(e.second);
      return (t & em) == em;
    });
    if (useful) out.push_back(t);
  }
  return out;
}

Hypergraph witness_from(const Indexed& ix, const std::vector<Mask>& chosen) {
  HypergraphBuilder b(ix.labels);
  for (Mask m : chosen) b.add(ix.to_edge(m));
  return std::move(b).build();
}

class Search {
 public:
  Search(const Indexed& ix, std::vector<Mask> candidates, std::uint64_t budget)
      : ix_(ix), cands_(std::move(candidates)), budget_(budget) {
    const std::size_t m = cands_.size();
    covers_.resize(m);
    conflicts_.resize(m);
    cover_list_.resize(ix_.edges.size());
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t e = 0; e < ix_.edges.size(); ++e) {
        Mask em = bit(ix_.edges[e].first) | bit(ix_.edges[e].second);
        if ((cands_[c] & em) == em) {
          covers_[c].push_back(e);
          cover_list_[e].push_back(c);
        }
      }
    }
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t d = 0; d < m; ++d) {
        Mask common = cands_[c] & cands_[d];
        if (c != d && std::popcount(common) == 2 && pair_edge(ix_, common) < 0) {
          conflicts_[c].push_back(d);
        }
      }
    }
  }

  std::uint64_t explored() const { return explored_; }

  // Returns the lexicographically least witness, or nullopt if none exists.
  std::optional<std::vector<Mask>> least_witness() {
    State state = root();
    if (!propagate(state) || !feasible(state)) return std::nullopt;
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      // A finished family with nothing chosen beyond c is a prefix of every
      // extension, hence smaller.
      if (complete(state) && !chosen_from(state, c)) break;
      if (state.status[c] != kOpen) continue;
      State trial = state;
      if (include(trial, c) && propagate(trial) && feasible(trial)) {
        state = std::move(trial);
      } else if (!exclude(state, c) || !propagate(state)) {
        throw Error(ErrorKind::InternalVerificationFailure, "feasible state lost its witness");
      }
    }
    std::vector<Mask> chosen;
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      if (state.status[c] == kIn) chosen.push_back(cands_[c]);
    }
    return chosen;
  }

 private:
  static constexpr signed char kOpen = 0;
  static constexpr signed char kIn = 1;
  static constexpr signed char kOut = -1;

  struct State {
    std::vector<signed char> status;
    std::vector<int> in_count;     // per graph edge: chosen triples containing it
    std::vector<int> avail_count;  // per graph edge: triples not excluded
  };

  State root() const {
    State s;
    s.status.assign(cands_.size(), kOpen);
    s.in_count.assign(ix_.edges.size(), 0);
    s.avail_count.resize(ix_.edges.size());
    for (std::size_t e = 0; e < ix_.edges.size(); ++e) {
      s.avail_count[e] = static_cast<int>(cover_list_[e].size());
    }
    return s;
  }

  bool chosen_from(const State& s, std::size_t first) const {
    return std::find(s.status.begin() + static_cast<std::ptrdiff_t>(first), s.status.end(), kIn) != s.status.end();
  }

  bool complete(const State& s) const {
    return std::all_of(s.in_count.begin(), s.in_count.end(), [](int k) { return k >= 2; });
  }

  bool include(State& s, std::size_t c) const {
    if (s.status[c] == kIn) return true;
    if (s.status[c] == kOut) return false;
    s.status[c] = kIn;
    for (std::size_t e : covers_[c]) ++s.in_count[e];
    for (std::size_t d : conflicts_[c]) {
      if (!exclude(s, d)) return false;
    }
    return true;
  }

  bool exclude(State& s, std::size_t c) const {
    if (s.status[c] == kOut) return true;
    if (s.status[c] == kIn) return false;
    s.status[c] = kOut;
    for (std::size_t e : covers_[c]) {
      if (--s.avail_count[e] < 2) return false;
    }
    return true;
  }

  // Forces the open candidates of every edge that needs all of them.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 0; e < ix_.edges.size(); ++e) {
        int need = std::max(0, 2 - s.in_count[e]);
        int open = s.avail_count[e] - s.in_count[e];
        if (open < need) return false;
        if (need == 0 || open != need) continue;
        for (std::size_t c : cover_list_[e]) {
          if (s.status[c] == kOpen) {
            if (!include(s, c)) return false;
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void tick() {
    ++explored_;
    if (budget_ != 0 && explored_ > budget_) {
      throw Error(ErrorKind::BudgetExhausted,
                  "search exceeded the node budget of " + std::to_string(budget_));
    }
  }

  // Does some witness extend `s`? `s` is already propagated.
  bool feasible(const State& s) {
    tick();
    std::size_t pick = ix_.edges.size();
    int best_open = 0;
    for (std::size_t e = 0; e < ix_.edges.size(); ++e) {
      if (s.in_count[e] >= 2) continue;
      int open = s.avail_count[e] - s.in_count[e];
      if (pick == ix_.edges.size() || open < best_open) {
        pick = e;
        best_open = open;
      }
    }
    if (pick == ix_.edges.size()) return true;
    std::size_t branch = cands_.size();
    for (std::size_t c : cover_list_[pick]) {
      if (s.status[c] == kOpen) {
        branch = c;
        break;
      }
    }
    {
      State with = s;
      if (include(with, branch) && propagate(with) && feasible(with)) return true;
    }
    State without = s;
    return exclude(without, branch) && propagate(without) && feasible(without);
  }

  const Indexed& ix_;
  std::vector<Mask> cands_;
  std::uint64_t budget_;
  std::uint64_t explored_ = 0;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> conflicts_;
  std::vector<std::vector<std::size_t>> cover_list_;
};

void check_size(const Graph& g, std::size_t limit) {
  if (g.vertex_count() > limit || g.vertex_count() > 64) {
    throw Error(ErrorKind::TooLarge, "graph has " + std::to_string(g.vertex_count()) +
                                         " vertices; the limit is " + std::to_string(limit));
  }
}

void check_witness(const Graph& g, const Hypergraph& w) {
  if (!is_k_uniform(w, 3) || ei(w) != g.hypergraph()) {
    throw Error(ErrorKind::InternalVerificationFailure, "decider produced an invalid witness");
  }
}

}  // namespace

std::vector<Edge> useful_hyperedges(const Graph& g) {
  check_size(g, 64);
  Indexed ix(g);
  std::vector<Edge> out;
  for (Mask m : useful_masks(ix)) out.push_back(ix.to_edge(m));
  return out;
}

DecisionOutcome decide_3uniform(const Graph& g, const DecideOptions& options) {
  check_size(g, options.max_vertices);
  Indexed ix(g);
  auto cands = useful_masks(ix);
  DecisionOutcome out;
  out.useful_count = cands.size();
  Search search(ix, std::move(cands), options.node_budget);
  auto chosen = search.least_witness();
  out.explored = search.explored();
  if (chosen) {
    out.verdict = Verdict::Realizable;
    out.witness = witness_from(ix, *chosen);
    check_witness(g, *out.witness);
  }
  return out;
}

DecisionOutcome decide_exhaustive(const Graph& g) {
  check_size(g, kMaxExhaustiveVertices);
  Indexed ix(g);
  const auto triples = all_triples(ix.labels.size());
  const std::size_t m = triples.size();

  // meet[i][j]: -2 if triples i and j share a non-edge pair, the edge id if
  // they share an edge, -1 otherwise.
  std::vector<std::vector<int>> meet(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Mask common = triples[i] & triples[j];
      if (i != j && std::popcount(common) == 2) {
        int e = pair_edge(ix, common);
        meet[i][j] = e < 0 ? -2 : e;
      }
    }
  }
  const Mask all_edges = ix.edges.empty() ? 0 : (Mask{1} << ix.edges.size()) - 1;
  // Triples holding no graph edge can be dropped from any witness; the
  // reported witness avoids them.
  Mask edgeless = 0;
  {
    const auto useful = useful_masks(ix);
    for (std::size_t i = 0; i < m; ++i) {
      if (std::find(useful.begin(), useful.end(), triples[i]) == useful.end()) edgeless |= Mask{1} << i;
    }
  }

  // Families as bitmasks over `triples` (bit i = i-th least triple). Returns
  // true if family a precedes b as a sorted sequence.
  auto precedes = [](Mask a, Mask b) {
    Mask diff = a ^ b;
    int i = std::countr_zero(diff);
    Mask above = ~((Mask{2} << i) - 1);
    if ((a >> i) & 1U) return (b & above) != 0;
    return (a & above) == 0;
  };

  DecisionOutcome out;
  out.useful_count = m;
  std::optional<Mask> best;
  const Mask limit = Mask{1} << m;
  std::vector<std::size_t> members;
  for (Mask family = 0; family < limit; ++family) {
    ++out.explored;
    members.clear();
    for (Mask rest = family; rest != 0; rest &= rest - 1) {
      members.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    Mask produced = 0;
    bool ok = true;
    for (std::size_t x = 0; x < members.size() && ok; ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        int e = meet[members[x]][members[y]];
        if (e == -2) {
          ok = false;
          break;
        }
        if (e >= 0) produced |= Mask{1} << e;
      }
    }
    if (!ok || produced != all_edges) continue;
    if ((family & edgeless) == 0 && (!best || precedes(family, *best))) best = family;
  }
  if (best) {
    std::vector<Mask> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if ((*best >> i) & 1U) chosen.push_back(triples[i]);
    }
    out.verdict = Verdict::Realizable;
    out.witness = witness_from(ix, chosen);
    check_witness(g, *out.witness);
  }
  return out;
}

}  // namespace eihg
