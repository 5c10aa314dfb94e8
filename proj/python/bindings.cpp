#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starstab/bch.hpp"
#include "starstab/certify.hpp"
#include "starstab/error.hpp"
#include "starstab/graph.hpp"
#include "starstab/iso.hpp"
#include "starstab/stability.hpp"
#include "starstab/theorem.hpp"

namespace py = pybind11;
using namespace starstab;

namespace {

VertexSet to_set(const std::vector<int>& members) {
  for (int v : members) {
    if (v < 0 || v >= kMaxOrder) fail(ErrorCode::invalid_parameter, "vertex " + std::to_string(v) + " out of range");
  }
  return VertexSet(std::span<const int>(members));
}

py::object json_to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict verdict_dict(const StabilityVerdict& v) {
  py::dict d;
  d["stable"] = v.stable;
  d["witness"] = v.witness ? py::cast(v.witness->members()) : py::none();
  d["checked_fault_sets"] = v.checked_fault_sets;
  return d;
}

py::dict instance_dict(const LabeledInstance& inst) {
  py::dict d;
  d["result"] = inst.result;
  d["k"] = inst.k;
  d["labels"] = inst.labelling.labels();
  d["warnings"] = inst.warnings;
  return d;
}

Labelling labelling_or_default(const Graph& pattern, const std::optional<std::vector<int>>& labels) {
  return labels ? Labelling::from_labels(*labels) : Labelling::identity(pattern.order());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum star vertex-stable graphs: construction, checking and certification";
  m.attr("__version__") = "0.1.0";

  static py::exception<Error> base(m, "StarstabError", PyExc_ValueError);
  static py::handle capacity = PyErr_NewException("starstab.CapacityError", base.ptr(), nullptr);
  static py::handle parse = PyErr_NewException("starstab.ParseError", base.ptr(), nullptr);
  static py::handle schema = PyErr_NewException("starstab.SchemaMismatchError", base.ptr(), nullptr);
  m.attr("CapacityError") = capacity;
  m.attr("ParseError") = parse;
  m.attr("SchemaMismatchError") = schema;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::capacity_exceeded: PyErr_SetString(capacity.ptr(), e.what()); break;
        case ErrorCode::parse_error: PyErr_SetString(parse.ptr(), e.what()); break;
        case ErrorCode::schema_mismatch: PyErr_SetString(schema.ptr(), e.what()); break;
        case ErrorCode::io_error: PyErr_SetString(PyExc_OSError, e.what()); break;
        default: PyErr_SetString(base.ptr(), e.what()); break;
      }
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("order"))
      .def_static(
          "from_edges",
          [](int order, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(order, edges); },
          py::arg("order"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return decode_graph6(s); }, py::arg("text"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("neighbours", [](const Graph& g, int v) { return VertexSet(g.neighbours(v)).members(); })
      .def("degree_sequence", &Graph::degree_sequence)
      .def("edges", &Graph::edges)
      .def("with_edge", &Graph::with_edge)
      .def("without_edge", &Graph::without_edge)
      .def("permuted", [](const Graph& g, const std::vector<int>& p) { return g.permuted(p); })
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def("dot", [](const Graph& g, int base) { return export_dot(g, base); }, py::arg("label_base") = 0)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("empty_graph", &empty_graph);
  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star", &star, py::arg("r"));
  m.def("conjunction", &conjunction);
  m.def("disjoint_union", &disjoint_union);
  m.def("near_complete_regular", &near_complete_regular);
  m.def("complement", &complement);
  m.def("induced_delete", [](const Graph& g, const std::vector<int>& faults) {
    return induced_delete(g, to_set(faults));
  });
  m.def("encode_graph6", &encode_graph6);
  m.def("decode_graph6", [](const std::string& s) { return decode_graph6(s); });

  m.def("canonical_form", [](const Graph& g) { return canonical_form(g).graph6; },
        "Canonical graph6 string; equal for isomorphic graphs");
  m.def("canonical_labelling", &canonical_labelling);
  m.def("is_isomorphic", &is_isomorphic);

  m.def(
      "bch_construct",
      [](const Graph& pattern, int k, std::optional<std::vector<int>> labels) {
        return instance_dict(bch_construct(pattern, k, labelling_or_default(pattern, labels)));
      },
      py::arg("pattern"), py::arg("k"), py::arg("labels") = py::none(),
      "Spare-vertex construction. labels are 1-based slots per pattern vertex (identity by default).");
  m.def("star_stable", &star_stable, py::arg("r"), py::arg("k"));
  m.def(
      "recovery_embedding",
      [](const Graph& pattern, int k, const std::vector<int>& faults, std::optional<std::vector<int>> labels) {
        const auto inst = bch_construct(pattern, k, labelling_or_default(pattern, labels));
        const VertexSet f = to_set(faults);
        const Embedding psi = recovery_embedding(inst, f);
        py::dict d;
        d["image"] = psi.image;
        d["valid"] = embedding_is_valid(inst, f, psi);
        return d;
      },
      py::arg("pattern"), py::arg("k"), py::arg("faults"), py::arg("labels") = py::none());

  m.def("is_star_stable", [](const Graph& g, int r, int k) { return verdict_dict(is_star_stable(g, r, k)); },
        py::arg("graph"), py::arg("r"), py::arg("k"));
  m.def("is_stable_general",
        [](const Graph& g, const Graph& h, int k) { return verdict_dict(is_stable_general(g, h, k)); },
        py::arg("graph"), py::arg("pattern"), py::arg("k"));
  m.def("contains_subgraph", &contains_subgraph, py::arg("host"), py::arg("pattern"));
  m.def("classify_low_degree",
        [](const Graph& g, int r, int k) { return std::string(to_string(classify_low_degree(g, r, k))); },
        py::arg("graph"), py::arg("r"), py::arg("k"));

  m.def("stab_case",
        [](int r, int k) {
          const StabCase c = stab_case(r, k);
          py::dict d;
          d["case"] = std::string(to_string(c.id));
          d["k0"] = c.k0 ? py::cast(*c.k0) : py::none();
          d["k1"] = c.k1 ? py::cast(*c.k1) : py::none();
          return d;
        },
        py::arg("r"), py::arg("k"));
  m.def("stab_value", &stab_value, py::arg("r"), py::arg("k"));
  m.def("extremal_family", &extremal_family, py::arg("r"), py::arg("k"));
  m.def("extremal_kinds",
        [](int r, int k) {
          std::vector<std::string> out;
          for (ExtremalKind kind : stab_result(r, k).extremal) out.emplace_back(to_string(kind));
          return out;
        },
        py::arg("r"), py::arg("k"));

  m.def("enumerate_graphs_by_edges", &enumerate_graphs_by_edges, py::arg("edges"), py::arg("max_vertices"));
  m.def("graphs_of_order_and_size", &graphs_of_order_and_size, py::arg("n"), py::arg("m"));
  m.def(
      "certify",
      [](int r, int k, unsigned threads, bool cross_check) {
        Certificate c;
        {
          py::gil_scoped_release release;
          c = certify(r, k, {threads, cross_check});
        }
        py::object d = json_to_python(to_json(c));
        d["verified"] = c.verified();
        return d;
      },
      py::arg("r"), py::arg("k"), py::arg("threads") = 0, py::arg("cross_check") = false,
      "Exhaustive certificate as a dict; 'verified' is True when minimality and the extremal set both hold.");
}
