#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qws/census.hpp"
#include "qws/error.hpp"
#include "qws/graph_io.hpp"
#include "qws/mixing.hpp"
#include "qws/report.hpp"
#include "qws/repro.hpp"
#include "qws/spectral.hpp"
#include "qws/transfer.hpp"

namespace py = pybind11;

namespace {

qws::AnalysisConfig config(const std::string& hamiltonian) {
  qws::AnalysisConfig cfg;
  cfg.hamiltonian = qws::parse_hamiltonian(hamiltonian);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_qws, m) {
  m.doc() = "continuous-time quantum walks on graphs";

  py::register_exception<qws::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qws::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<qws::NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<qws::Graph>(m, "Graph")
      .def(py::init<qws::Matrix, std::string>(), py::arg("weights"), py::arg("tag") = "")
      .def_property_readonly("order", &qws::Graph::order)
      .def_property_readonly("weights", &qws::Graph::weights)
      .def_property_readonly("tag", &qws::Graph::tag)
      .def("is_connected", &qws::Graph::is_connected)
      .def("is_bipartite", &qws::Graph::is_bipartite)
      .def("__repr__", [](const qws::Graph& g) { return "<Graph " + g.tag() + " n=" + std::to_string(g.order()) + ">"; });

  m.def("parse", &qws::parse_graph_expr, py::arg("expr"));

  m.def(
      "transition",
      [](const qws::Graph& g, double t, const std::string& h) {
        return qws::transition(qws::decompose(g, qws::parse_hamiltonian(h)), t);
      },
      py::arg("graph"), py::arg("t"), py::arg("hamiltonian") = "adjacency");
  m.def(
      "transition_oracle",
      [](const qws::Graph& g, double t, const std::string& h) {
        return qws::transition_oracle(g, t, qws::parse_hamiltonian(h));
      },
      py::arg("graph"), py::arg("t"), py::arg("hamiltonian") = "adjacency");
  m.def(
      "eigenvalues",
      [](const qws::Graph& g, const std::string& h) {
        const auto d = qws::decompose(g, qws::parse_hamiltonian(h));
        return py::make_tuple(d.thetas, d.multiplicities);
      },
      py::arg("graph"), py::arg("hamiltonian") = "adjacency");
  m.def(
      "average_mixing", [](const qws::Graph& g) { return qws::average_mixing(qws::decompose(g)); },
      py::arg("graph"));
  m.def("flatness_residual", &qws::flatness_residual, py::arg("matrix"));

  // JSON strings; the Python wrapper decodes them.
  m.def(
      "_find_pst",
      [](const qws::Graph& g, int u, std::optional<int> v, const std::string& h) {
        const qws::AnalysisConfig cfg = config(h);
        const auto opts = cfg.transfer_options();
        const auto a = v ? qws::check_pst(g, u, *v, opts) : qws::find_pst(g, u, opts);
        return qws::verdict_json(g, cfg, a).dump();
      },
      py::arg("graph"), py::arg("u"), py::arg("v") = py::none(), py::arg("hamiltonian") = "adjacency");
  m.def(
      "_analyze",
      [](const qws::Graph& g, bool pst_all, bool periodic, bool mixing, bool average_mixing, double t_max,
         const std::string& h) {
        qws::AnalysisConfig cfg = config(h);
        cfg.t_max = t_max;
        qws::AnalyzeRequest req;
        req.pst_all = pst_all;
        req.periodic = periodic;
        req.mixing = mixing;
        req.average_mixing = average_mixing;
        py::gil_scoped_release release;
        return qws::analyze(g, req, cfg).dump();
      },
      py::arg("graph"), py::arg("pst_all") = true, py::arg("periodic") = false, py::arg("mixing") = false,
      py::arg("average_mixing") = false, py::arg("t_max") = 100.0, py::arg("hamiltonian") = "adjacency");
  m.def(
      "_census",
      [](const std::string& family, int size) {
        qws::AnalysisConfig cfg;
        std::string out;
        auto sink = [&](const qws::Json& row) { out += row.dump() + "\n"; };
        py::gil_scoped_release release;
        const auto s = family == "cubelike" ? qws::cubelike_census(size, cfg, sink) : qws::circulant_census(size, cfg, sink);
        out += qws::summary_json(family.c_str(), s).dump() + "\n";
        return out;
      },
      py::arg("family"), py::arg("size"));
  m.def(
      "_check",
      [](int id) {
        py::gil_scoped_release release;
        const auto r = qws::run_check(id, qws::AnalysisConfig{});
        return qws::repro_json({r}).dump();
      },
      py::arg("id"));
}
