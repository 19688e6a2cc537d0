#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "linecover/errors.hpp"
#include "linecover/formulas.hpp"
#include "linecover/graph.hpp"
#include "linecover/json_io.hpp"
#include "linecover/orders.hpp"
#include "linecover/orientations.hpp"
#include "linecover/recognition.hpp"
#include "linecover/reports.hpp"
#include "linecover/transforms.hpp"
#include "linecover/version.hpp"

namespace py = pybind11;

namespace {

linecover::Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<linecover::Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return linecover::Graph::build(n, std::move(es));
}

std::vector<std::pair<int, int>> edge_list(const linecover::Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edge_count());
  for (const linecover::Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "covers of line graphs by equivalence and chordal subgraphs, "
            "elbow orientations, and order families";
  m.attr("__version__") = linecover::kVersion;

  py::register_exception<linecover::BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<linecover::ConstructionFailure>(m, "ConstructionFailure");
  py::register_exception<linecover::ParseError>(m, "ParseError");

  py::class_<linecover::Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &linecover::Graph::vertex_count)
      .def_property_readonly("m", &linecover::Graph::edge_count)
      .def("edges", &edge_list)
      .def("adjacent", &linecover::Graph::adjacent)
      .def("degree", &linecover::Graph::degree)
      .def("to_json", [](const linecover::Graph& g) {
        return linecover::graph_to_json(g).dump(2);
      })
      .def("__repr__", [](const linecover::Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("graph_from_json", [](const std::string& text, bool normalize) {
    return linecover::graph_from_json(nlohmann::json::parse(text), normalize);
  }, py::arg("text"), py::arg("normalize") = false);

  m.def("generate", [](const std::string& spec, uint64_t seed) {
    return linecover::parse_graph_spec(spec, seed).graph;
  }, py::arg("spec"), py::arg("seed") = 0,
     "build a graph from a generator spec such as 'complete:4' or 'random:10:0.3'");

  m.def("line_graph", [](const linecover::Graph& g) {
    linecover::LineGraphMap lg = linecover::line_graph(g);
    return lg.line;
  });
  m.def("is_triangle_free", &linecover::is_triangle_free);
  m.def("is_chordal", &linecover::is_chordal);
  m.def("is_interval", &linecover::is_interval);
  m.def("is_equivalence_graph", &linecover::is_equivalence_graph);

  m.def("greedy_coloring", [](const linecover::Graph& g) {
    linecover::Coloring c = linecover::greedy_coloring(g);
    return py::make_tuple(c.num_colors, c.colors);
  });
  m.def("chromatic_number", [](const linecover::Graph& g, int vertex_budget) {
    linecover::ChromaticResult r = linecover::chromatic_number_exact(g, vertex_budget);
    return py::make_tuple(r.chi, r.witness.colors);
  }, py::arg("g"), py::arg("vertex_budget") = 16);

  m.def("ceil_lg_lg", &linecover::ceil_lg_lg);

  m.def("exact_elb", [](const linecover::Graph& g, int k_max, int edge_budget) {
    return linecover::exact_elb(g, k_max, edge_budget);
  }, py::arg("g"), py::arg("k_max") = 4, py::arg("edge_budget") = 12);
  m.def("exact_inelb", [](const linecover::Graph& g, int k_max, int edge_budget) {
    return linecover::exact_inelb(g, k_max, edge_budget);
  }, py::arg("g"), py::arg("k_max") = 4, py::arg("edge_budget") = 12);

  m.def("build_family", [](int C, const std::string& property) {
    linecover::OrderFamily f =
        linecover::build_family(C, linecover::order_property_from_name(property));
    return f.orders;
  }, py::arg("C"), py::arg("property"),
     "verified order family; property is 'suitable3' or 'mixing3'");
  m.def("min_family_size", [](int C, const std::string& property) {
    return linecover::min_family_size(C, linecover::order_property_from_name(property));
  }, py::arg("C"), py::arg("property"));
  m.def("is_3_suitable", [](int C, const std::vector<std::vector<int>>& orders) {
    return linecover::is_3_suitable({C, orders});
  });
  m.def("is_3_mixing", [](int C, const std::vector<std::vector<int>>& orders) {
    return linecover::is_3_mixing({C, orders});
  });

  m.def("cover_build_json", [](const linecover::Graph& g, int vertex_budget) {
    linecover::PipelineResult pr =
        linecover::build_equivalence_cover_pipeline(g, vertex_budget);
    return linecover::cover_to_json(pr.cover).dump(2);
  }, py::arg("g"), py::arg("vertex_budget") = 16,
     "verified equivalence cover of the line graph, as a json document");

  m.def("verify_json", [](const std::string& text) {
    linecover::VerifyVerdict v = linecover::run_verify(nlohmann::json::parse(text));
    return py::make_tuple(v.pass, v.doc_type, v.details.dump(2));
  }, "verify a cover / orientation family / order family json document");

  m.def("covering_chain", [](const linecover::Graph& g, int vertex_budget,
                             int edge_budget, int k_max) {
    linecover::ChainReport r =
        linecover::covering_chain(g, vertex_budget, edge_budget, k_max);
    py::dict out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["chi"] = r.chi;
    out["lower_bound"] = r.lower_bound;
    out["eq_cover_size"] = r.eq_cover_size;
    out["inelbow_family_size"] = r.inelbow_family_size;
    out["elbow_family_size"] = r.elbow_family_size;
    out["elb_exact"] = r.elb_exact;
    out["inelb_exact"] = r.inelb_exact;
    out["violations"] = r.violations;
    out["pass"] = r.pass();
    return out;
  }, py::arg("g"), py::arg("vertex_budget") = 16, py::arg("edge_budget") = 12,
     py::arg("k_max") = 4);
}
