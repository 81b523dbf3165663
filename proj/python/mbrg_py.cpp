#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/pairing.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/solver.hpp"
#include "mbrg/verify.hpp"

namespace py = pybind11;
using namespace mbrg;

namespace {

// Results cross the boundary as plain Python objects via their JSON form.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<int> members(VertexSet w) { return w.members(); }

}  // namespace

PYBIND11_MODULE(mbrg, m) {
  m.doc() = "Exact engine for the Maker-Breaker resolving game";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NotConnected>(m, "NotConnected", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
             return Graph::build(n, edges, std::move(labels));
           }),
           py::arg("n"), py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("edges", &Graph::edges)
      .def("label", &Graph::label)
      .def("vertex", [](const Graph& g, const std::string& label) { return g.vertex(label); })
      .def("to_json", [](const Graph& g) { return to_py(to_json(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<mbrg.Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  m.def(
      "family",
      [](const std::string& kind, std::vector<int> params) {
        return generate({parse_family_kind(kind), std::move(params)});
      },
      py::arg("kind"), py::arg("params") = std::vector<int>{});
  m.def("families", [] { return to_py(family_catalog()); });

  m.def("dim", [](const Graph& g) { return metric_dimension(g).dimension; });
  m.def("bases", [](const Graph& g) {
    std::vector<std::vector<int>> out;
    for (auto w : enumerate_metric_bases(g)) out.push_back(members(w));
    return out;
  });
  m.def("is_resolving", [](const Graph& g, const std::vector<int>& w) {
    return is_resolving(g, all_pairs_distances(g), VertexSet::from(w));
  });

  m.def(
      "solve",
      [](const Graph& g, const std::string& first) {
        py::gil_scoped_release release;
        const GameValue v = solve(g, parse_player(first));
        py::gil_scoped_acquire acquire;
        return to_py(to_json(v));
      },
      py::arg("graph"), py::arg("first") = "R");
  m.def("outcome_record", [](const Graph& g) {
    py::gil_scoped_release release;
    const OutcomeRecord r = outcome_record(g);
    py::gil_scoped_acquire acquire;
    return to_py(to_json(r));
  });

  m.def(
      "pairing",
      [](const Graph& g, bool dim_only) -> py::object {
        const auto p = dim_only ? find_dim_pairing(g) : find_smallest_pairing(g);
        if (!p) return py::none();
        return py::cast(p->pairs);
      },
      py::arg("graph"), py::arg("dim_only") = false);
  m.def("is_pairing_resolving", [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
    return is_pairing_resolving(g, PairingSet{pairs});
  });

  m.def(
      "verify_sweep",
      [](int max_n) {
        VerifyOptions o;
        o.sweep_max_order = max_n;
        return to_py(to_json(verify_sweep(o)));
      },
      py::arg("max_n") = 6);
  m.def("verify_petersen", [] { return to_py(to_json(verify_petersen())); });
}
