#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcat/cli.hpp"
#include "qcat/closure.hpp"
#include "qcat/document.hpp"
#include "qcat/props.hpp"
#include "qcat/sequences.hpp"

namespace py = pybind11;
using namespace qcat;

namespace {

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["law"] = r.law;
  d["ok"] = r.ok;
  d["witness"] = r.witness;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["detail"] = r.detail;
  return d;
}

// pybind11 holders cannot point to const; the bound methods are all const.
std::shared_ptr<Quantale> held(const QuantalePtr& q) { return std::const_pointer_cast<Quantale>(q); }

std::vector<std::string> mask_names(const VCategory& x, Mask m) {
  std::vector<std::string> out;
  for (int i = 0; i < x.size(); ++i)
    if (m >> i & 1u) out.push_back(x.objects[i]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_qcat, m) {
  m.doc() = "Finite quantale-enriched categories";

  static py::exception<Error> error(m, "QcatError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(py::str(e.what()));
      exc.attr("kind") = to_string(e.kind());
      exc.attr("witness") = e.witness();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Quantale, std::shared_ptr<Quantale>>(m, "Quantale")
      .def_property_readonly("label", &Quantale::label)
      .def_property_readonly("elements", [](const Quantale& q) { return q.lattice().names(); })
      .def_property_readonly("unit", [](const Quantale& q) { return q.name(q.unit()); })
      .def("tensor", [](const Quantale& q, const std::string& u, const std::string& v) {
        return q.name(q.tensor(q.index_of(u), q.index_of(v)));
      })
      .def("hom", [](const Quantale& q, const std::string& u, const std::string& v) {
        return q.name(q.hom(q.index_of(u), q.index_of(v)));
      })
      .def("leq", [](const Quantale& q, const std::string& u, const std::string& v) {
        return q.leq(q.index_of(u), q.index_of(v));
      })
      .def("check_residuation", [](const Quantale& q) { return report_dict(check_residuation(q)); });

  m.def("builtin", [](const std::string& expr) { return held(builtin(expr)); }, py::arg("expr"));

  py::class_<Document>(m, "Document")
      .def_property_readonly("quantales", [](const Document& d) {
        std::vector<std::string> out;
        for (const auto& [k, v] : d.quantales) out.push_back(k);
        return out;
      })
      .def_property_readonly("categories", [](const Document& d) {
        std::vector<std::string> out;
        for (const auto& [k, v] : d.categories) out.push_back(k);
        return out;
      })
      .def("quantale", [](const Document& d, const std::string& n) { return held(d.quantale(n).q); })
      .def("objects", [](const Document& d, const std::string& n) { return d.category(n).cat.objects; })
      .def("cauchy_complete", [](const Document& d, const std::string& n) {
        return report_dict(is_cauchy_complete(d.category(n).cat));
      })
      .def("closure", [](const Document& d, const std::string& n, const std::vector<std::string>& set) {
        const VCategory& x = d.category(n).cat;
        Mask mask = 0;
        for (const auto& s : set) mask |= Mask{1} << x.index_of(s);
        return mask_names(x, l_closure(x, mask));
      })
      .def("cauchy_degree", [](const Document& d, const std::string& n, const std::string& seq) {
        const VCategory& x = d.category(n).cat;
        return x.q().name(cauchy_degree(x, parse_sequence(x, seq)));
      })
      .def("serialize", &serialize)
      .def("__eq__", [](const Document& a, const Document& b) { return a == b; });

  m.def("load_document", &load_document, py::arg("path"));
  m.def("parse_document", &parse_document_text, py::arg("text"));

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        const SuiteResult r = run_suite(name, seed);
        py::dict d;
        d["suite"] = r.suite;
        d["seed"] = r.seed;
        d["cases"] = r.cases;
        d["failed"] = r.failed;
        d["notes"] = r.notes;
        return d;
      },
      py::arg("name"), py::arg("seed"));
  m.def("suite_names", &suite_names);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
