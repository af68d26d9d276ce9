#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tripack/error.hpp"
#include "tripack/generator.hpp"
#include "tripack/graph.hpp"
#include "tripack/graph_io.hpp"
#include "tripack/koenig.hpp"
#include "tripack/menger.hpp"
#include "tripack/network.hpp"
#include "tripack/oracle.hpp"
#include "tripack/solver.hpp"

namespace py = pybind11;
using namespace tripack;

namespace {

using EdgeTuple = std::pair<VertexId, VertexId>;
using TriangleTuple = std::tuple<VertexId, VertexId, VertexId>;

std::vector<EdgeTuple> to_tuples(std::span<const Edge> edges) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<TriangleTuple> to_tuples(std::span<const Triangle> ts) {
  std::vector<TriangleTuple> out;
  for (const Triangle& t : ts) out.emplace_back(t.a, t.b, t.c);
  return out;
}

std::vector<Edge> to_edges(const std::vector<EdgeTuple>& tuples) {
  std::vector<Edge> out;
  for (const auto& [u, v] : tuples) out.emplace_back(u, v);
  return out;
}

std::vector<Triangle> to_triangles(const std::vector<TriangleTuple>& tuples) {
  std::vector<Triangle> out;
  for (const auto& [a, b, c] : tuples) out.push_back({a, b, c});
  return out;
}

OracleBudget make_budget(std::size_t max_triangles, std::size_t max_bc_edges,
                         std::size_t max_bc_vertices, double seconds) {
  OracleBudget b;
  b.max_triangles = max_triangles;
  b.max_bc_edges = max_bc_edges;
  b.max_bc_vertices = max_bc_vertices;
  b.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  return b;
}

std::vector<std::string> labels(const NetworkGraph& h, std::span<const NodeIndex> nodes) {
  std::vector<std::string> out;
  for (NodeIndex n : nodes) out.push_back(h.node(n).label());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Triangle transversals and packings of bilaterally-complete tripartite graphs";

  auto base = py::register_exception<Error>(m, "TripackError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<NotBilaterallyComplete>(m, "NotBilaterallyComplete", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::enum_<Part>(m, "Part").value("A", Part::A).value("B", Part::B).value("C", Part::C);
  py::enum_<Side>(m, "Side").value("AB", Side::AB).value("AC", Side::AC).value("BC", Side::BC);

  py::class_<TripartiteGraph>(m, "TripartiteGraph")
      .def(py::init([](std::vector<VertexId> a, std::vector<VertexId> b, std::vector<VertexId> c,
                       const std::vector<EdgeTuple>& ab, const std::vector<EdgeTuple>& ac,
                       const std::vector<EdgeTuple>& bc) {
             return TripartiteGraph({std::move(a), std::move(b), std::move(c)},
                                    {to_edges(ab), to_edges(ac), to_edges(bc)});
           }),
           py::arg("A"), py::arg("B"), py::arg("C"), py::arg("AB"), py::arg("AC"), py::arg("BC"))
      .def_property_readonly("p", &TripartiteGraph::p)
      .def_property_readonly("q", &TripartiteGraph::q)
      .def_property_readonly("r", &TripartiteGraph::r)
      .def("part", &TripartiteGraph::part)
      .def("side", [](const TripartiteGraph& g, Side s) { return to_tuples(g.side(s)); })
      .def("edges", [](const TripartiteGraph& g) { return to_tuples(g.edges()); })
      .def("has_edge", py::overload_cast<VertexId, VertexId>(&TripartiteGraph::has_edge, py::const_))
      .def("side_complete", &TripartiteGraph::side_complete)
      .def("__eq__", [](const TripartiteGraph& x, const TripartiteGraph& y) { return x == y; })
      .def("__repr__", [](const TripartiteGraph& g) {
        std::ostringstream os;
        os << "TripartiteGraph(|A|=" << g.p() << ", |B|=" << g.q() << ", |C|=" << g.r()
           << ", edges=" << g.edge_count() << ")";
        return os.str();
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_property_readonly("valid", &ValidationReport::valid)
      .def_readonly("side_complete", &ValidationReport::side_complete)
      .def_readonly("problems", &ValidationReport::problems);
  m.def("validate", &validate);

  py::class_<Orientation>(m, "Orientation")
      .def_readonly("roles", &Orientation::roles)
      .def_property_readonly("apex", &Orientation::apex)
      .def("is_identity", &Orientation::is_identity);
  m.def("detect_orientation", &detect_orientation);
  m.def("apply_orientation", &apply_orientation);

  m.def("enumerate_triangles", [](const TripartiteGraph& g) { return to_tuples(enumerate_triangles(g)); });
  m.def("is_transversal", [](const TripartiteGraph& g, const std::vector<EdgeTuple>& edges) {
    auto es = to_edges(edges);
    return is_transversal(g, es);
  });
  m.def("is_packing", [](const TripartiteGraph& g, const std::vector<TriangleTuple>& ts) {
    auto tris = to_triangles(ts);
    return is_packing(g, tris);
  });

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("value", &Certificate::value)
      .def_property_readonly("transversal",
                             [](const Certificate& c) { return to_tuples(c.transversal.edges); })
      .def_property_readonly("packing",
                             [](const Certificate& c) { return to_tuples(c.packing.triangles); })
      .def_readonly("transversal_verified", &Certificate::transversal_verified)
      .def_readonly("packing_verified", &Certificate::packing_verified)
      .def_readonly("sizes_equal", &Certificate::sizes_equal)
      .def_property_readonly("verified", &Certificate::verified);
  m.def("solve", &solve, py::arg("graph"), py::call_guard<py::gil_scoped_release>());

  py::class_<NetworkGraph>(m, "NetworkGraph")
      .def_property_readonly("node_count", &NetworkGraph::node_count)
      .def_property_readonly("internal_node_count", &NetworkGraph::internal_node_count)
      .def_property_readonly("arc_count", [](const NetworkGraph& h) { return h.arcs().size(); })
      .def("export_arcs", [](const NetworkGraph& h) {
        std::ostringstream os;
        h.write_arcs(os);
        return os.str();
      });
  m.def("build_network", &build_network);
  m.def("max_disjoint_paths", [](const NetworkGraph& h) {
    std::vector<std::vector<std::string>> out;
    for (const auto& path : max_disjoint_paths(h).paths) out.push_back(labels(h, path));
    return out;
  });
  m.def("min_separator", [](const NetworkGraph& h) {
    return labels(h, min_separator(h, max_flow(h)).nodes);
  });

  m.def("edge_colour", [](const std::vector<VertexId>& left, const std::vector<VertexId>& right,
                          const std::vector<EdgeTuple>& edges) {
    auto colouring = edge_colour({left, right, to_edges(edges)});
    std::vector<std::vector<EdgeTuple>> out;
    for (const auto& cls : colouring.classes) out.push_back(to_tuples(cls));
    return out;
  });

  const auto bt = py::arg("max_triangles") = 40;
  const auto be = py::arg("max_bc_edges") = 14;
  const auto bv = py::arg("max_bc_vertices") = 14;
  const auto bs = py::arg("seconds") = 30.0;

  m.def(
      "brute_max_packing",
      [](const TripartiteGraph& g, std::size_t t, std::size_t e, std::size_t v, double s) {
        auto res = brute_max_packing(g, make_budget(t, e, v, s));
        return py::make_tuple(res.value, to_tuples(res.witness.triangles));
      },
      py::arg("graph"), bt, be, bv, bs);
  m.def(
      "brute_min_transversal",
      [](const TripartiteGraph& g, bool enumerate_all, std::size_t t, std::size_t e, std::size_t v,
         double s) {
        auto res = brute_min_transversal(g, make_budget(t, e, v, s), enumerate_all);
        std::vector<std::vector<EdgeTuple>> all;
        for (const auto& tr : res.all_minimum) all.push_back(to_tuples(tr.edges));
        return py::make_tuple(res.value, to_tuples(res.witness.edges), all);
      },
      py::arg("graph"), py::arg("enumerate_all") = false, bt, be, bv, bs);
  m.def(
      "uniform_transversal_min",
      [](const TripartiteGraph& g, std::size_t t, std::size_t e, std::size_t v, double s) {
        auto res = uniform_transversal_min(g, make_budget(t, e, v, s));
        return py::make_tuple(res.value, to_tuples(res.bc_edges), res.cover);
      },
      py::arg("graph"), bt, be, bv, bs);
  m.def(
      "mao_cheng_min",
      [](const TripartiteGraph& g, std::size_t t, std::size_t e, std::size_t v, double s) {
        auto res = mao_cheng_min(g, make_budget(t, e, v, s));
        return py::make_tuple(res.value, res.b_kept, res.c_kept);
      },
      py::arg("graph"), bt, be, bv, bs);

  m.def(
      "generate",
      [](std::size_t p, std::size_t q, std::size_t r, double bc_density, const std::string& mode,
         std::uint64_t seed, double ab_density, double ac_density) {
        auto parsed = parse_gen_mode(mode);
        if (!parsed) throw PreconditionError("unknown mode '" + mode + "'");
        GenSpec spec{p, q, r, bc_density, *parsed, ab_density, ac_density, seed};
        return generate(spec);
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("bc_density") = 0.5,
      py::arg("mode") = "bilateral", py::arg("seed") = 0, py::arg("ab_density") = 1.0,
      py::arg("ac_density") = 1.0);

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("serialize_graph", &serialize_graph);
  m.def("load_graph", [](const std::string& path) { return load_graph(path); });
}
