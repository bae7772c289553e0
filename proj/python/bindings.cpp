#include "nodalhodge/catalog.hpp"
#include "nodalhodge/oracle.hpp"
#include "nodalhodge/report.hpp"
#include "nodalhodge/reproduce.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nodalhodge;

namespace {

Hypersurface from_catalog(const std::string& name) { return catalog(name).hypersurface; }

Hypersurface from_document(const std::string& text) { return to_hypersurface(parse_input(text)); }

std::string record_json(const Hypersurface& h, int q) {
  return to_json(analyze(h, "", {q}))["records"][0].dump();
}

py::dict row_dict(const CheckRow& r) {
  py::dict d;
  d["criterion"] = r.criterion;
  d["id"] = r.id;
  d["computed"] = r.computed;
  d["expected"] = r.expected;
  d["citation"] = r.citation;
  d["kind"] = kind_name(r.kind);
  d["match"] = r.match;
  return d;
}

}  // namespace

PYBIND11_MODULE(_nodalhodge, m) {
  m.doc() = "Exact graded-piece computations for nodal projective hypersurfaces";

  static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
  static py::exception<NodeVerificationError> node_error(m, "NodeVerificationError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NodeVerificationError& e) {
      py::set_error(node_error, e.what());
    } catch (const InputError& e) {
      std::string msg = e.what();
      if (e.line() > 0) msg += " [line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + "]";
      py::set_error(input_error, msg.c_str());
    }
  });

  py::class_<Hypersurface>(m, "Hypersurface")
      .def_static("from_catalog", &from_catalog, py::arg("name"))
      .def_static("from_json", &from_document, py::arg("text"), "Parse and verify an input document.")
      .def_property_readonly("n", &Hypersurface::n)
      .def_property_readonly("d", &Hypersurface::d)
      .def_property_readonly("m", &Hypersurface::m)
      .def_property_readonly("smooth", &Hypersurface::smooth)
      .def_property_readonly("node_count", [](const Hypersurface& h) { return h.nodes().size(); })
      .def_property_readonly("polynomial", [](const Hypersurface& h) { return h.f().to_string(); })
      .def_property_readonly("nodes",
                             [](const Hypersurface& h) {
                               std::vector<std::string> out;
                               for (const auto& y : h.nodes().points()) out.push_back(y.to_string());
                               return out;
                             })
      .def("ring_dim", [](const Hypersurface& h, int k) { return h.engine().ring(k).dim(); }, py::arg("k"))
      .def("jacobian_dim", [](const Hypersurface& h, int k) { return h.engine().jacobian(k).dim(); }, py::arg("k"))
      .def("symbolic_dim", [](const Hypersurface& h, int i, int k) { return h.engine().symbolic(i, k).dim(); },
           py::arg("i"), py::arg("k"))
      .def("ordinary_dim", [](const Hypersurface& h, int i, int k) { return h.engine().ordinary(i, k).dim(); },
           py::arg("i"), py::arg("k"))
      .def("symbolic_times_jacobian_dim",
           [](const Hypersurface& h, int i, int k) { return h.engine().symbolic_times_jacobian(i, k).dim(); },
           py::arg("i"), py::arg("k"))
      .def("grf_dim_low_q", &grf_dim_low_q, py::arg("q"))
      .def("conjecture1_dim", &conjecture1_dim, py::arg("q"))
      .def("record_json", &record_json, py::arg("q"), "One analysis record as JSON text.")
      .def("export_json", [](const Hypersurface& h) { return input_to_json(h).dump(2) + "\n"; })
      .def("brute_force_quotient",
           [](const Hypersurface& h, int r) {
             const OracleQuotient o = brute_force_I_mod_J(h.f(), h.nodes().points(), r);
             return py::make_tuple(o.dim_I, o.dim_J, o.quotient);
           },
           py::arg("r"), "(dim I_r, dim J_r, dim (I/J)_r) by the independent brute-force path.");

  m.def("catalog_names", &catalog_names);
  m.def("c_coeff", &c_coeff, py::arg("n_plus_1"), py::arg("d"), py::arg("i"));
  m.def("c_coeff_row", &c_coeff_row, py::arg("n_plus_1"), py::arg("d"));
  m.def("target_degree", &target_degree, py::arg("n"), py::arg("d"), py::arg("q"));
  m.def(
      "node_bounds",
      [](int n, int d) {
        const NodeBounds b = node_bounds(n, d);
        py::dict out;
        out["n"] = b.n;
        out["d"] = b.d;
        out["odd_bound"] = b.odd_bound ? py::cast(*b.odd_bound) : py::none();
        out["varchenko_rhs"] = b.varchenko_rhs;
        out["varchenko_sum"] = b.varchenko_sum;
        out["sum_matches_rhs"] = b.sum_matches_rhs;
        return out;
      },
      py::arg("n"), py::arg("d"));
  m.def(
      "analyze_json",
      [](const Hypersurface& h, const std::string& source, const std::vector<int>& qs) {
        return emit(analyze(h, source, qs));
      },
      py::arg("h"), py::arg("source"), py::arg("qs"));
  m.def(
      "run_criteria",
      [](const std::vector<int>& criteria) {
        std::vector<CheckRow> rows;
        {
          py::gil_scoped_release release;
          rows = run_criteria(criteria);
        }
        py::list out;
        for (const auto& r : rows) out.append(row_dict(r));
        return out;
      },
      py::arg("criteria"));
}
