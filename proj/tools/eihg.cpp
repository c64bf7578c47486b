#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eihg/decider.hpp"
#include "eihg/digraph_ops.hpp"
#include "eihg/ei.hpp"
#include "eihg/fixture_suite.hpp"
#include "eihg/generators.hpp"
#include "eihg/helly.hpp"
#include "eihg/laws.hpp"
#include "eihg/realizer.hpp"
#include "eihg/text_format.hpp"

namespace {

using namespace eihg;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Hypergraph load_hypergraph(const std::string& path) { return parse_hypergraph(slurp(path)); }
Digraph load_digraph(const std::string& path) { return parse_digraph(slurp(path)); }

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::uint64_t budget_from_env() {
  const char* raw = std::getenv("EIHG_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    std::size_t used = 0;
    auto v = std::stoull(raw, &used);
    if (used != std::string_view(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidSpec, std::string("EIHG_NODE_BUDGET is not an integer: ") + raw);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-intersection hypergraph toolkit"};
  app.require_subcommand(1);
  int status = kOk;

  // ei
  std::string ei_in, ei_out;
  std::size_t iterate = 1;
  auto* ei_cmd = app.add_subcommand("ei", "Edge-intersection hypergraph of a hypergraph file");
  ei_cmd->add_option("file", ei_in, "Hypergraph file, - for stdin")->required();
  ei_cmd->add_option("--iterate,-k", iterate, "Number of EI steps");
  ei_cmd->add_option("-o,--output", ei_out, "Output file");
  ei_cmd->callback([&] {
    emit(ei_out, render_hypergraph(ei_iterate(load_hypergraph(ei_in), iterate)));
  });

  // ei-number
  std::string num_in;
  auto* num_cmd = app.add_subcommand("ei-number", "Steps until the iterated EI has no edges");
  num_cmd->add_option("file", num_in, "Hypergraph file")->required();
  num_cmd->callback([&] { std::cout << ei_number(load_hypergraph(num_in)) << '\n'; });

  // generate
  std::string family;
  std::size_t gen_n = 0, gen_d = 2;
  int catalog_id = 0;
  bool realization = false;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Write a family member or a catalog fixture");
  auto* fam_opt = gen_cmd->add_option("--family", family,
                                      "hypercycle, hyperpath, complete, path, cycle or star");
  auto* n_opt = gen_cmd->add_option("--n", gen_n, "Number of vertices (leaves for star)");
  gen_cmd->add_option("--d", gen_d, "Edge size");
  auto* cat_opt = gen_cmd->add_option("--catalog", catalog_id, "Catalog tree id");
  gen_cmd->add_flag("--realization", realization, "Emit the stored 3-uniform realization");
  gen_cmd->add_option("-o,--output", gen_out, "Output file");
  fam_opt->excludes(cat_opt);
  fam_opt->needs(n_opt);
  gen_cmd->callback([&] {
    if (cat_opt->count() > 0) {
      emit(gen_out, render_hypergraph(realization ? catalog_realization(catalog_id)
                                                  : catalog_tree(catalog_id).hypergraph()));
      return;
    }
    if (fam_opt->count() == 0) throw CLI::ValidationError("generate needs --family or --catalog");
    auto f = family_from_string(family);
    if (!f) throw Error(ErrorKind::InvalidSpec, "unknown family " + family);
    emit(gen_out, render_hypergraph(generate({*f, gen_n, gen_d})));
  });

  // laws
  std::string law_name;
  std::size_t max_n = 12;
  auto* laws_cmd = app.add_subcommand("laws", "Check the closed-form laws over a parameter sweep");
  laws_cmd->add_option("--law", law_name, "Restrict to one law");
  laws_cmd->add_option("--max-n", max_n, "Largest n in the sweep");
  laws_cmd->callback([&] {
    std::vector<LawId> laws;
    if (law_name.empty()) {
      laws = family_laws();
    } else {
      auto id = law_from_string(law_name);
      if (!id || *id == LawId::CompetitionIdentity) throw Error(ErrorKind::InvalidSpec, "unknown law " + law_name);
      laws.push_back(*id);
    }
    for (LawId law : laws) {
      for (const auto& p : law_sweep(law, max_n)) {
        auto r = verify_law(law, p);
        std::cout << format_report(r) << '\n';
        if (!r.agrees) status = kNegative;
      }
    }
  });

  // digraph
  std::string dg_in, dg_kind, dg_out;
  bool check_identity = false;
  auto* dg_cmd = app.add_subcommand("digraph", "Neighborhood hypergraphs of a digraph file");
  dg_cmd->add_option("file", dg_in, "Digraph file")->required();
  auto* kind_opt = dg_cmd->add_option(
      "--kind", dg_kind, "competition, common-enemy, double-competition, niche or h-prime");
  auto* id_opt = dg_cmd->add_flag("--check-identity", check_identity,
                                  "Compare both sides of the neighborhood identity");
  dg_cmd->add_option("-o,--output", dg_out, "Output file");
  kind_opt->excludes(id_opt);
  dg_cmd->callback([&] {
    Digraph d = load_digraph(dg_in);
    if (check_identity) {
      auto r = check_competition_identity(d);
      std::cout << format_report(r) << '\n';
      if (!r.agrees) status = kNegative;
      return;
    }
    if (dg_kind.empty()) throw CLI::ValidationError("digraph needs --kind or --check-identity");
    auto kind = neighborhood_kind_from_string(dg_kind);
    if (!kind) throw Error(ErrorKind::InvalidSpec, "unknown kind " + dg_kind);
    emit(dg_out, render_hypergraph(neighborhood_hypergraph(d, *kind)));
  });

  // helly
  std::string helly_in;
  bool bruteforce = false;
  auto* helly_cmd = app.add_subcommand("helly", "Exit 0 if the hypergraph is Helly, 1 otherwise");
  helly_cmd->add_option("file", helly_in, "Hypergraph file")->required();
  helly_cmd->add_flag("--bruteforce", bruteforce, "Use the subfamily oracle");
  helly_cmd->callback([&] {
    Hypergraph h = load_hypergraph(helly_in);
    bool helly = bruteforce ? is_helly_bruteforce(h) : is_helly(h);
    std::cout << (helly ? "helly" : "not-helly") << '\n';
    if (!helly) status = kNegative;
  });

  // realize-tree
  std::string rt_in, rt_out;
  auto* rt_cmd = app.add_subcommand("realize-tree", "3-uniform hypergraph whose EI is the given tree");
  rt_cmd->add_option("file", rt_in, "Tree file (2-uniform)")->required();
  rt_cmd->add_option("-o,--output", rt_out, "Output file");
  rt_cmd->callback([&] {
    Graph t(load_hypergraph(rt_in));
    try {
      auto cert = realize_tree(t);
      emit(rt_out, render_hypergraph(cert.witness));
    } catch (const UnrealizableTree& e) {
      std::cout << "unrealizable id=" << e.catalog_id() << " name=" << e.name() << '\n';
      status = kNegative;
    }
  });

  // decide
  std::string dec_in, witness_out;
  bool exhaustive = false;
  DecideOptions dec_opts;
  auto* dec_cmd = app.add_subcommand("decide", "Does a 3-uniform hypergraph have this graph as EI?");
  dec_cmd->add_option("file", dec_in, "Graph file (2-uniform)")->required();
  dec_cmd->add_flag("--exhaustive", exhaustive, "Try every family of triples (at most 6 vertices)");
  auto* budget_opt = dec_cmd->add_option("--node-budget", dec_opts.node_budget,
                                         "Abort after this many search nodes (overrides EIHG_NODE_BUDGET)");
  dec_cmd->add_option("--max-vertices", dec_opts.max_vertices, "Refuse larger graphs");
  dec_cmd->add_option("--witness-out", witness_out, "Write the witness here");
  dec_cmd->callback([&] {
    Graph g(load_hypergraph(dec_in));
    if (budget_opt->count() == 0) dec_opts.node_budget = budget_from_env();
    auto out = exhaustive ? decide_exhaustive(g) : decide_3uniform(g, dec_opts);
    const bool yes = out.verdict == Verdict::Realizable;
    if (yes && !witness_out.empty()) write_text_file(witness_out, render_hypergraph(*out.witness));
    std::cout << "verdict=" << (yes ? "realizable" : "unrealizable") << " explored=" << out.explored
              << " useful=" << out.useful_count
              << " witness=" << (yes && !witness_out.empty() ? witness_out : "-") << '\n';
    if (!yes) status = kNegative;
  });

  // verify-paper
  std::string catalog_path;
  auto* vp_cmd = app.add_subcommand("verify-paper", "Run the stored fixture and law suite");
  vp_cmd->add_option("--catalog", catalog_path, "Catalog file (default: the built-in copy)");
  vp_cmd->callback([&] {
    std::string text = catalog_path.empty() ? std::string(catalog_text()) : slurp(catalog_path);
    std::size_t passed = 0;
    auto items = run_fixture_suite(text);
    for (const auto& item : items) {
      std::cout << (item.passed ? "PASS " : "FAIL ") << item.name;
      if (!item.detail.empty()) std::cout << " (" << item.detail << ')';
      std::cout << '\n';
      passed += item.passed ? 1 : 0;
    }
    std::cout << passed << '/' << items.size() << " passed\n";
    if (passed != items.size()) status = kNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const UnrealizableTree& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
