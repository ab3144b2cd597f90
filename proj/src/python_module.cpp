#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cutlab/expression.hpp"
#include "cutlab/serial.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace cutlab;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<long long>());
    case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& v : j) out.append(json_to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

LatticePoint point_from(const std::vector<long long>& x, long long alpha) {
  return make_point(x, alpha);
}

MinorPattern pattern_from(const std::string& name) {
  if (name == "K4") return MinorPattern::K4;
  if (name == "K5") return MinorPattern::K5;
  if (name == "K5_minus_e") return MinorPattern::K5_minus_e;
  if (name == "K33") return MinorPattern::K33;
  throw graph_error("unknown minor pattern: " + name);
}

CliqueSumSpec spec_from(int k, const std::vector<std::pair<int, int>>& glue) {
  return CliqueSumSpec{k, glue};
}

}  // namespace

PYBIND11_MODULE(cutlab, m) {
  m.doc() = "Exact computations on cut polytopes of graphs";

  py::register_exception<graph_error>(m, "GraphError", PyExc_ValueError);
  py::register_exception<precondition_error>(m, "PreconditionError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_readonly("n_vertices", &Graph::n_vertices)
      .def_readonly("edges", &Graph::edges)
      .def("n_edges", &Graph::n_edges)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.n_vertices) + " vertices, " +
               std::to_string(g.n_edges()) + " edges)";
      });

  m.def("build_graph", &build_graph, py::arg("n_vertices"), py::arg("edges"));
  m.def("standard_graph", &standard_graph, py::arg("tag"),
        "Family tag: K<n>, C<n>, P<n>, or K<m>x<n>");
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("read_edge_list", &read_edge_list, py::arg("path"));
  m.def("parse_graph_expression", &parse_graph_expression, py::arg("text"),
        "Clique-sum expression, e.g. 'C3 #0 P1' or 'C5 #1[0=0,1=1] C4'");
  m.def(
      "clique_sum",
      [](const Graph& a, const Graph& b, int k, const std::vector<std::pair<int, int>>& glue) {
        return clique_sum(a, b, spec_from(k, glue));
      },
      py::arg("left"), py::arg("right"), py::arg("k"), py::arg("glue"));
  m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
  m.def("canonical_edge_form", &canonical_edge_form, py::arg("graph"));

  m.def(
      "structural_predicates",
      [](const Graph& g) { return json_to_py(to_json(structural_predicates(g))); },
      py::arg("graph"));
  m.def(
      "has_minor", [](const Graph& g, const std::string& p) { return has_minor(g, pattern_from(p)); },
      py::arg("graph"), py::arg("pattern"));
  m.def(
      "find_minor",
      [](const Graph& g, const std::string& p) -> py::object {
        auto w = find_minor(g, pattern_from(p));
        if (!w) return py::none();
        py::list sets;
        for (const auto& bs : w->branch_sets) sets.append(bs);
        return sets;
      },
      py::arg("graph"), py::arg("pattern"));

  m.def(
      "cut_vectors",
      [](const Graph& g) {
        py::list out;
        for (const CutVector& c : enumerate_cut_vectors(g))
          out.append(py::make_tuple(c.subset_mask, c.coords));
        return out;
      },
      py::arg("graph"), "All (subset_mask, coords) pairs, 2^{|V|-1} of them");
  m.def(
      "facet_system", [](const Graph& g) { return json_to_py(to_json(facet_system(g))); },
      py::arg("graph"));
  m.def(
      "in_group",
      [](const Graph& g, const std::vector<long long>& x, long long alpha) {
        return in_group(g, point_from(x, alpha));
      },
      py::arg("graph"), py::arg("x"), py::arg("alpha"));
  m.def(
      "in_cone",
      [](const Graph& g, const std::vector<long long>& x, long long alpha, bool strict) {
        return in_cone(g, point_from(x, alpha), strict);
      },
      py::arg("graph"), py::arg("x"), py::arg("alpha"), py::arg("strict") = false);
  m.def(
      "decompose",
      [](const Graph& g, const std::vector<long long>& x, long long alpha) -> py::object {
        auto d = decompose(g, point_from(x, alpha));
        if (!d) return py::none();
        return py::cast(d->parts);
      },
      py::arg("graph"), py::arg("x"), py::arg("alpha"),
      "Lexicographically first multiset of cut masks summing to the point, or None");

  m.def(
      "normality_probe",
      [](const Graph& g, long long bound) { return json_to_py(to_json(normality_probe(g, bound))); },
      py::arg("graph"), py::arg("bound"));
  m.def("default_probe_bound", &default_probe_bound, py::arg("graph"));
  m.def(
      "min_interior_degree",
      [](const Graph& g, long long search_bound) -> py::object {
        auto d = min_interior_degree(g, search_bound);
        if (!d) return py::none();
        return py::int_(*d);
      },
      py::arg("graph"), py::arg("search_bound"));
  m.def(
      "canonical_generators",
      [](const Graph& g, long long bound) {
        return json_to_py(to_json(canonical_generators(g, bound)));
      },
      py::arg("graph"), py::arg("degree_bound") = 4);
  m.def(
      "is_gorenstein_normal",
      [](const Graph& g) { return json_to_py(to_json(is_gorenstein_normal(g))); },
      py::arg("graph"));

  m.def("k5_witness_json", []() {
    return to_json(complete_graph(5), k5_witness()).dump();
  });
  m.def(
      "verify_witness_json",
      [](const std::string& text) {
        auto [g, w] = witness_from_json(json::parse(text));
        WitnessCheck chk = check_seminormality_witness(g, w);
        py::dict out;
        out["ok"] = chk.ok;
        out["failing_leg"] = chk.ok ? py::object(py::none()) : py::object(py::str(chk.failing_leg));
        out["detail"] = chk.ok ? py::object(py::none()) : py::object(py::str(chk.detail));
        return out;
      },
      py::arg("text"));

  m.def(
      "regularity", [](const Graph& g) { return json_to_py(to_json(regularity(g))); },
      py::arg("graph"));
  m.def(
      "expected_regularity",
      [](const Graph& g) -> py::object {
        auto e = expected_regularity(g);
        if (!e) return py::none();
        return json_to_py(to_json(*e));
      },
      py::arg("graph"));
  m.def(
      "classify_small",
      [](int max_edges, bool dedup, int jobs) {
        ClassificationResult res = classify_small(max_edges, dedup, jobs);
        py::list rows;
        for (const auto& row : res.rows) rows.append(json_to_py(to_json(row)));
        py::dict out;
        out["rows"] = rows;
        out["verdict"] = res.verdict;
        out["mismatches"] = py::int_(res.mismatches.size());
        return out;
      },
      py::arg("max_edges") = 7, py::arg("dedup_isomorphic") = true, py::arg("jobs") = 1);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
