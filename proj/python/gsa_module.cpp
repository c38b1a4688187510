#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsa/gsa.hpp"

namespace py = pybind11;
using namespace gsa;

namespace {

std::vector<Kind> all_of(const LabeledGraph& g, const std::string& kind) {
  if (kind != "min" && kind != "max") throw py::value_error("kind must be 'min' or 'max'");
  return std::vector<Kind>(static_cast<std::size_t>(g.size()), kind == "min" ? Kind::Min : Kind::Max);
}

LabeledGraph make(Symbol sigma, std::vector<Symbol> labels, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return LabeledGraph(sigma, std::move(labels), es);
}

std::vector<std::pair<NodeId, NodeId>> edge_list(const LabeledGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.from, e.to);
  return out;
}

py::list keys(const MinMaxPartition& p) {
  py::list out;
  for (const auto& group : p.groups) {
    py::list g;
    for (const auto& k : group) g.append(py::make_tuple(k.node, to_string(k.kind)));
    out.append(g);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_gsa, m) {
  m.doc() = "Min/max partitions of input-consistent labelled graphs";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<LabeledGraph>(m, "Graph")
      .def(py::init(&make), py::arg("sigma"), py::arg("labels"), py::arg("edges"))
      .def_property_readonly("size", &LabeledGraph::size)
      .def_property_readonly("sigma", &LabeledGraph::sigma)
      .def_property_readonly("labels",
                             [](const LabeledGraph& g) { return std::vector<Symbol>(g.labels().begin(), g.labels().end()); })
      .def_property_readonly("edges", &edge_list)
      .def("__len__", &LabeledGraph::size)
      .def("__eq__", [](const LabeledGraph& a, const LabeledGraph& b) { return a == b; })
      .def("__repr__", [](const LabeledGraph& g) {
        return "<gsa.Graph n=" + std::to_string(g.size()) + " m=" + std::to_string(g.edge_count()) +
               " sigma=" + std::to_string(g.sigma()) + ">";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("format_graph", &format_graph, py::arg("graph"));
  m.def("read_graph_file", &read_graph_file, py::arg("path"));

  m.def("validate", [](const LabeledGraph& g) {
    py::list out;
    for (const auto& v : validate(g).violations) {
      py::dict d;
      d["rule"] = v.rule;
      d["node"] = v.node;
      d["message"] = v.message;
      out.append(d);
    }
    return out;
  }, py::arg("graph"), "List of violated assumptions, empty when the graph is valid.");

  m.def("transpose_alphabet", &transpose_alphabet, py::arg("graph"));
  m.def("compute_tau", [](const LabeledGraph& g, const std::string& kind) {
    const auto tau = compute_tau(g, all_of(g, kind));
    return std::vector<int>(tau.begin(), tau.end());
  }, py::arg("graph"), py::arg("kind") = "min");
  m.def("trim", [](const LabeledGraph& g) { return trim(g, compute_tau(g)); }, py::arg("graph"));

  m.def("min_partition", [](const LabeledGraph& g) { return min_partition(g).groups; }, py::arg("graph"));
  m.def("max_partition", [](const LabeledGraph& g) { return max_partition(g).groups; }, py::arg("graph"));
  m.def("minmax_partition", [](const LabeledGraph& g) { return keys(minmax_partition(g)); }, py::arg("graph"));
  m.def("oracle_partition", [](const LabeledGraph& g, const std::string& kind) {
    return oracle_partition(g, all_of(g, kind)).groups;
  }, py::arg("graph"), py::arg("kind") = "min");
  m.def("oracle_minmax", [](const LabeledGraph& g) { return keys(oracle_minmax(g)); }, py::arg("graph"));

  m.def("generate", [](const std::string& kind, NodeId n, Symbol sigma, std::uint64_t seed, double density) {
    GenOptions o;
    o.kind = parse_gen_kind(kind);
    o.n = n;
    o.sigma = sigma;
    o.seed = seed;
    o.density = density;
    return generate(o);
  }, py::arg("kind"), py::arg("n"), py::arg("sigma"), py::arg("seed") = 0, py::arg("density") = 0.1);
}
