#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eihg/decider.hpp"
#include "eihg/digraph_ops.hpp"
#include "eihg/ei.hpp"
#include "eihg/fixture_suite.hpp"
#include "eihg/generators.hpp"
#include "eihg/helly.hpp"
#include "eihg/laws.hpp"
#include "eihg/realizer.hpp"
#include "eihg/text_format.hpp"
#include "eihg/trees.hpp"

namespace py = pybind11;
using namespace eihg;

namespace {

template <typename T>
T parse_enum(std::optional<T> v, const std::string& what, const std::string& name) {
  if (!v) throw Error(ErrorKind::InvalidSpec, "unknown " + what + " " + name);
  return *v;
}

py::object law_value(const LawValue& v) {
  if (const auto* h = std::get_if<Hypergraph>(&v)) return py::cast(*h);
  return py::cast(std::get<std::size_t>(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge-intersection hypergraphs";

  auto base = py::register_exception<Error>(m, "EihgError", PyExc_ValueError);
  py::register_exception<UnrealizableTree>(m, "UnrealizableTreeError", base.ptr());

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init(&Hypergraph::make), py::arg("vertices"), py::arg("edges"))
      .def_static("on_range", &Hypergraph::on_range, py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertices", &Hypergraph::vertices)
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__len__", &Hypergraph::edge_count)
      .def("__repr__", [](const Hypergraph& h) {
        return "<Hypergraph vertices=" + std::to_string(h.vertex_count()) +
               " edges=" + std::to_string(h.edge_count()) + ">";
      })
      .def("__str__", &render_hypergraph);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&Digraph::make), py::arg("vertices"), py::arg("arcs"))
      .def_property_readonly("vertices", &Digraph::vertices)
      .def_property_readonly("arcs", &Digraph::arcs)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__str__", &render_digraph);

  m.def("ei", &ei, py::arg("h"));
  m.def("ei_iterate", &ei_iterate, py::arg("h"), py::arg("k"));
  m.def("ei_number", &ei_number, py::arg("h"));
  m.def("satisfies_necessary_condition", &satisfies_necessary_condition, py::arg("h"));
  m.def("augment_linear", &augment_linear, py::arg("h"));
  m.def("hypergraph_union", &hypergraph_union);
  m.def("is_linear", &is_linear);
  m.def("is_k_uniform", &is_k_uniform);

  m.def("parse_hypergraph", [](const std::string& s) { return parse_hypergraph(s); });
  m.def("render_hypergraph", &render_hypergraph);
  m.def("parse_digraph", [](const std::string& s) { return parse_digraph(s); });
  m.def("render_digraph", &render_digraph);

  m.def("generate", [](const std::string& family, std::size_t n, std::size_t d) {
    return generate({parse_enum(family_from_string(family), "family", family), n, d});
  }, py::arg("family"), py::arg("n"), py::arg("d") = 2);
  m.def("hypercycle", &hypercycle, py::arg("n"), py::arg("d"));
  m.def("hyperpath", &hyperpath, py::arg("n"), py::arg("d"));
  m.def("complete_uniform", &complete_uniform, py::arg("n"), py::arg("d"));
  m.def("star_realization", &star_realization, py::arg("leaves"));
  m.def("path_realization", &path_realization, py::arg("n"));
  m.def("catalog_tree", [](int id) { return catalog_tree(id).hypergraph(); }, py::arg("id"));
  m.def("catalog_realization", &catalog_realization, py::arg("id"));
  m.def("catalog_realization_ids", &catalog_realization_ids);

  m.def("neighborhood_hypergraph", [](const Digraph& d, const std::string& kind) {
    return neighborhood_hypergraph(d, parse_enum(neighborhood_kind_from_string(kind), "kind", kind));
  }, py::arg("digraph"), py::arg("kind"));
  m.def("check_competition_identity", [](const Digraph& d) {
    auto r = check_competition_identity(d);
    return py::make_tuple(r.agrees, law_value(r.computed), law_value(r.predicted));
  }, py::arg("digraph"));

  m.def("is_helly", &is_helly, py::arg("h"));
  m.def("is_helly_bruteforce", &is_helly_bruteforce, py::arg("h"));

  m.def("verify_law", [](const std::string& law, std::size_t n, std::size_t d, std::size_t k) {
    auto r = verify_law(parse_enum(law_from_string(law), "law", law), {n, d, k});
    py::dict out;
    out["agrees"] = r.agrees;
    out["predicted"] = law_value(r.predicted);
    out["computed"] = law_value(r.computed);
    out["line"] = format_report(r);
    return out;
  }, py::arg("law"), py::arg("n"), py::arg("d"), py::arg("k") = 0);

  m.def("enumerate_trees", [](std::size_t n) {
    std::vector<Hypergraph> out;
    for (const auto& t : enumerate_trees(n)) out.push_back(t.hypergraph());
    return out;
  }, py::arg("n"));
  m.def("realize_tree", [](const Hypergraph& tree) { return realize_tree(Graph(tree)).witness; },
        py::arg("tree"));
  m.def("decide_3uniform", [](const Hypergraph& g, std::size_t max_vertices, std::uint64_t node_budget) {
    auto out = decide_3uniform(Graph(g), {max_vertices, node_budget});
    return py::make_tuple(out.verdict == Verdict::Realizable, out.witness, out.explored);
  }, py::arg("graph"), py::arg("max_vertices") = 10, py::arg("node_budget") = 0);
  m.def("decide_exhaustive", [](const Hypergraph& g) {
    auto out = decide_exhaustive(Graph(g));
    return py::make_tuple(out.verdict == Verdict::Realizable, out.witness, out.explored);
  }, py::arg("graph"));

  m.def("run_fixture_suite", []() {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (auto& item : run_fixture_suite(catalog_text())) out.emplace_back(item.name, item.passed, item.detail);
    return out;
  });
}
