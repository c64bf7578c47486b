#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "eihg/decider.hpp"
#include "eihg/digraph_ops.hpp"
#include "eihg/ei.hpp"
#include "eihg/generators.hpp"
#include "eihg/helly.hpp"
#include "eihg/laws.hpp"
#include "eihg/realizer.hpp"
#include "eihg/trees.hpp"
#include "support.hpp"

using namespace eihg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int id, const char* title, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s %2d %s: %s (%.3fs)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string ratio(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

}  // namespace

int main() {
  criterion(1, "catalog realizations reproduce their trees", [](std::string& d) {
    auto start = Clock::now();
    std::size_t ok = 0;
    for (int id : catalog_realization_ids()) {
      auto w = catalog_realization(id);
      ok += is_k_uniform(w, 3) && ei(w) == catalog_tree(id).hypergraph() ? 1 : 0;
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    d = ratio(ok, catalog_realization_ids().size()) + " fixtures";
    return ok == 33 && catalog_realization_ids().size() == 33 && secs < 1.0;
  });

  criterion(2, "star and path constructions", [](std::string& d) {
    std::size_t ok = 0, total = 0;
    for (std::size_t n = 3; n <= 50; ++n, ++total) ok += ei(star_realization(n)) == star_graph(n).hypergraph() ? 1 : 0;
    for (std::size_t n : {std::size_t{1}}) {
      ++total;
      ok += ei(path_realization(n)) == path_graph(n).hypergraph() ? 1 : 0;
    }
    for (std::size_t n = 7; n <= 50; ++n, ++total) ok += ei(path_realization(n)) == path_graph(n).hypergraph() ? 1 : 0;
    d = ratio(ok, total) + " constructions";
    return ok == total;
  });

  criterion(3, "exactly seven unrealizable trees on at most 8 vertices", [](std::string& d) {
    auto start = Clock::now();
    std::vector<std::string> bad;
    std::size_t total = 0;
    bool ok = true;
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& t : enumerate_trees(n)) {
        ++total;
        auto ex = match_exceptional_tree(t);
        bool realizable = decide_3uniform(t).verdict == Verdict::Realizable;
        if (!realizable) bad.push_back(ex ? ex->name : "unexpected");
        ok = ok && realizable != ex.has_value();
      }
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    d = std::to_string(total) + " trees, unrealizable:";
    for (const auto& b : bad) d += " " + b;
    return ok && total == 48 && bad.size() == 7 && secs < 300.0;
  });

  criterion(4, "hypercycle and hyperpath laws", [](std::string& d) {
    std::size_t ok = 0, total = 0;
    for (std::size_t dd = 3; dd <= 5; ++dd) {
      for (std::size_t n = 2 * dd - 1; n <= 12; ++n) {
        for (std::size_t k = 1; k <= dd - 2; ++k, ++total) {
          ok += ei_iterate(hypercycle(n, dd), k) == predicted_ei_iter(Family::Hypercycle, n, dd, k) ? 1 : 0;
        }
        ++total;
        ok += ei_number(hypercycle(n, dd)) == dd - 1 ? 1 : 0;
      }
    }
    for (std::size_t dd = 2; dd <= 6; ++dd) {
      for (std::size_t n = dd + 1; n <= 14; ++n, ++total) {
        std::size_t expect = n >= 2 * dd - 1 ? dd - 1 : n - dd + 1;
        ok += ei_number(hyperpath(n, dd)) == expect && predicted_ei_number(Family::Hyperpath, n, dd) == expect ? 1 : 0;
      }
    }
    d = ratio(ok, total) + " checks";
    return ok == total;
  });

  criterion(5, "complete uniform laws", [](std::string& d) {
    std::size_t ok = 0, total = 0;
    for (std::size_t dd = 3; dd <= 6; ++dd) {
      for (std::size_t n = dd + 1; n <= 9; ++n) {
        auto h = complete_uniform(n, dd);
        for (std::size_t k = 1; k <= dd - 2; ++k, ++total) {
          std::ptrdiff_t t = static_cast<std::ptrdiff_t>(dd);
          for (std::size_t j = 0; j < k; ++j) t = std::max<std::ptrdiff_t>(2, 2 * t - static_cast<std::ptrdiff_t>(n));
          Hypergraph expect(Hypergraph::on_range(static_cast<VertexId>(n), {}));
          for (std::size_t s = static_cast<std::size_t>(t); s <= dd - k; ++s) {
            expect = hypergraph_union(expect, complete_uniform(n, s));
          }
          ok += ei_iterate(h, k) == expect ? 1 : 0;
        }
        ++total;
        ok += ei_number(h) == dd - 1 ? 1 : 0;
      }
    }
    d = ratio(ok, total) + " checks";
    return ok == total;
  });

  criterion(6, "neighborhood identity on random digraphs", [](std::string& d) {
    std::mt19937_64 rng(6006);
    const double probs[] = {0.1, 0.3, 0.5};
    std::size_t ok = 0;
    for (int i = 0; i < 500; ++i) {
      VertexId n = std::uniform_int_distribution<VertexId>(1, 8)(rng);
      ok += check_competition_identity(eihg::testing::random_digraph(rng, n, probs[i % 3])).agrees ? 1 : 0;
    }
    d = ratio(ok, 500) + " digraphs";
    return ok == 500;
  });

  criterion(7, "Helly hypergraphs stay Helly under ei", [](std::string& d) {
    std::mt19937_64 rng(7007);
    std::size_t ok = 0;
    for (int i = 0; i < 200; ++i) {
      auto h = random_helly_hypergraph(rng);
      ok += is_helly_bruteforce(h) && is_helly_bruteforce(ei(h)) ? 1 : 0;
    }
    d = ratio(ok, 200) + " hypergraphs";
    return ok == 200;
  });

  criterion(8, "linear augmentation and the necessary condition", [](std::string& d) {
    std::mt19937_64 rng(8008);
    std::size_t aug = 0, aug_total = 0;
    while (aug_total < 500) {
      VertexId n = std::uniform_int_distribution<VertexId>(3, 10)(rng);
      auto h = eihg::testing::random_linear_hypergraph(rng, n, 6);
      if (h.has_edge(h.vertices())) continue;
      ++aug_total;
      aug += ei(augment_linear(h)) == h ? 1 : 0;
    }
    std::size_t nec = 0;
    for (int i = 0; i < 500; ++i) {
      VertexId n = std::uniform_int_distribution<VertexId>(3, 9)(rng);
      nec += satisfies_necessary_condition(ei(eihg::testing::random_hypergraph(rng, n, 2 + i % 9, 6))) ? 1 : 0;
    }
    d = ratio(aug, 500) + " augmented, " + ratio(nec, 500) + " satisfy the condition";
    return aug == 500 && nec == 500;
  });

  criterion(9, "every tree on 9 to 11 vertices is realized", [](std::string& d) {
    std::size_t ok = 0, total = 0;
    std::vector<Graph> nine;
    for (std::size_t n = 9; n <= 11; ++n) {
      for (const auto& t : enumerate_trees(n)) {
        ++total;
        auto cert = realize_tree(t);
        ok += cert.verified && is_k_uniform(cert.witness, 3) && ei(cert.witness) == t.hypergraph() ? 1 : 0;
        if (n == 9) nine.push_back(t);
      }
    }
    std::mt19937_64 rng(9009);
    std::shuffle(nine.begin(), nine.end(), rng);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < 30; ++i) agree += decide_3uniform(nine[i]).verdict == Verdict::Realizable ? 1 : 0;
    d = ratio(ok, total) + " certificates, " + ratio(agree, 30) + " decider agreement";
    return total == 47 + 106 + 235 && ok == total && agree == 30;
  });

  criterion(10, "3-uniform hypercycles give cycles", [](std::string& d) {
    std::size_t ok = 0;
    for (std::size_t n = 5; n <= 30; ++n) ok += ei(hypercycle(n, 3)) == cycle_graph(n).hypergraph() ? 1 : 0;
    d = ratio(ok, 26) + " cycles";
    return ok == 26;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
