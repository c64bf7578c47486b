#include "eihg/fixture_suite.hpp"

#include <map>
#include <random>

#include "eihg/decider.hpp"
#include "eihg/digraph_ops.hpp"
#include "eihg/ei.hpp"
#include "eihg/generators.hpp"
#include "eihg/helly.hpp"
#include "eihg/laws.hpp"
#include "eihg/realizer.hpp"
#include "eihg/text_format.hpp"
#include "eihg/trees.hpp"

namespace eihg {

namespace {

class Suite {
 public:
  template <typename F>
  void check(std::string name, F&& body) {
    SuiteItem item{std::move(name), false, {}};
    try {
      item.detail = body(item.passed);
    } catch (const std::exception& e) {
      item.passed = false;
      item.detail = std::string("error: ") + e.what();
    }
    items_.push_back(std::move(item));
  }

  std::vector<SuiteItem> take() { return std::move(items_); }

 private:
  std::vector<SuiteItem> items_;
};

Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<VertexId> vs;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(static_cast<VertexId>(i));
  std::bernoulli_distribution arc(p);
  std::vector<Digraph::Arc> arcs;
  for (VertexId a : vs)
    for (VertexId b : vs)
      if (a != b && arc(rng)) arcs.emplace_back(a, b);
  return Digraph::make(std::move(vs), std::move(arcs));
}

}  // namespace

std::vector<SuiteItem> run_fixture_suite(std::string_view catalog) {
  Suite suite;

  std::map<std::string, Hypergraph> trees;
  std::vector<std::pair<std::string, Hypergraph>> realizations;
  for (auto& rec : parse_fixture_records(catalog)) {
    if (rec.kind == "tree") trees.emplace(rec.name, std::move(rec.hypergraph));
    if (rec.kind == "realization") realizations.emplace_back(rec.name, std::move(rec.hypergraph));
  }

  for (const auto& [name, h] : realizations) {
    suite.check("catalog " + name + " realization", [&, &name = name, &h = h](bool& ok) {
      auto it = trees.find(name);
      ok = it != trees.end() && is_k_uniform(h, 3) && ei(h) == it->second;
      return std::to_string(h.edge_count()) + " triples";
    });
  }

  suite.check("star realizations, 3..50 leaves", [](bool& ok) {
    ok = true;
    for (std::size_t n = 3; n <= 50; ++n) ok = ok && ei(star_realization(n)) == star_graph(n).hypergraph();
    return std::string("48 stars");
  });
  suite.check("path realizations, n = 1 and 7..50", [](bool& ok) {
    ok = ei(path_realization(1)) == path_graph(1).hypergraph();
    for (std::size_t n = 7; n <= 50; ++n) ok = ok && ei(path_realization(n)) == path_graph(n).hypergraph();
    return std::string("45 paths");
  });

  for (const auto& ex : exceptional_trees()) {
    suite.check("exceptional tree " + std::string(ex.name) + " unrealizable", [&](bool& ok) {
      auto it = trees.find("T" + std::to_string(ex.id));
      if (it == trees.end()) throw Error(ErrorKind::NotInCatalog, "tree missing from catalog");
      auto out = decide_3uniform(Graph(it->second));
      ok = out.verdict == Verdict::Unrealizable;
      return std::to_string(out.explored) + " nodes";
    });
  }

  suite.check("trees on at most 8 vertices: exactly seven unrealizable", [](bool& ok) {
    std::size_t unrealizable = 0;
    std::size_t total = 0;
    ok = true;
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& t : enumerate_trees(n)) {
        ++total;
        bool exceptional = match_exceptional_tree(t).has_value();
        bool realizable = decide_3uniform(t).verdict == Verdict::Realizable;
        if (!realizable) ++unrealizable;
        ok = ok && (exceptional != realizable);
      }
    }
    ok = ok && unrealizable == 7 && total == 48;
    return std::to_string(total) + " trees, " + std::to_string(unrealizable) + " unrealizable";
  });

  suite.check("necessary condition rejects {123, 234}", [](bool& ok) {
    ok = !satisfies_necessary_condition(Hypergraph::on_range(4, {{1, 2, 3}, {2, 3, 4}}));
    return std::string();
  });
  suite.check("full vertex set recovers a linear hypergraph", [](bool& ok) {
    Hypergraph h = Hypergraph::on_range(4, {{1, 2}, {3, 4}});
    ok = ei(augment_linear(h)) == h;
    return std::string();
  });

  for (LawId law : family_laws()) {
    const std::size_t max_n = law == LawId::CycleFromHypercycle ? 30
                              : (law == LawId::CompleteIterate || law == LawId::CompleteEiNumber) ? 9
                                                                                                   : 12;
    suite.check("law " + std::string(to_string(law)) + " up to n=" + std::to_string(max_n),
                [&](bool& ok) {
                  auto sweep = law_sweep(law, max_n);
                  std::size_t agree = 0;
                  for (const auto& p : sweep) agree += verify_law(law, p).agrees ? 1 : 0;
                  ok = agree == sweep.size();
                  return std::to_string(agree) + "/" + std::to_string(sweep.size()) + " agree";
                });
  }

  suite.check("competition identity on 200 random digraphs", [](bool& ok) {
    std::mt19937_64 rng(20240601);
    const double probs[] = {0.1, 0.3, 0.5};
    std::size_t agree = 0;
    for (std::size_t i = 0; i < 200; ++i) {
      std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
      agree += check_competition_identity(random_digraph(rng, n, probs[i % 3])).agrees ? 1 : 0;
    }
    ok = agree == 200;
    return std::to_string(agree) + "/200 agree";
  });

  suite.check("Helly property survives ei on 100 random Helly hypergraphs", [](bool& ok) {
    std::mt19937_64 rng(7);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < 100; ++i) {
      kept += is_helly(ei(random_helly_hypergraph(rng))) ? 1 : 0;
    }
    ok = kept == 100;
    return std::to_string(kept) + "/100 Helly";
  });

  return suite.take();
}

}  // namespace eihg
