#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhforge/catalog.hpp"
#include "qhforge/expr.hpp"
#include "qhforge/json_report.hpp"
#include "qhforge/verify.hpp"

namespace py = pybind11;

namespace {

using namespace qhforge;
using algebra::AlgebraElement;
using algebra::RingPtr;

struct PyRing {
  RingPtr ptr;
};

struct PyElement {
  AlgebraElement value;
};

PyRing make_ring(const std::string& id, const std::string& kappa) {
  return PyRing{catalog::make_ring(id, expr::parse_rational(kappa))};
}

PyElement parse(const PyRing& ring, const std::string& text) {
  return PyElement{expr::parse_element(ring.ptr, text)};
}

std::string dump(const io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_qhforge, m) {
  m.doc() = "exact quantum homology rings over Novikov coefficients";

  py::register_exception<qhforge::Error>(m, "QhforgeError");

  py::class_<PyRing>(m, "Ring")
      .def(py::init(&make_ring), py::arg("id"), py::arg("kappa") = "1")
      .def_property_readonly("name", [](const PyRing& r) { return r.ptr->name; })
      .def_property_readonly("mode",
                             [](const PyRing& r) { return algebra::to_string(r.ptr->mode); })
      .def_property_readonly("complex_dim", [](const PyRing& r) { return r.ptr->complex_dim; })
      .def_property_readonly("min_chern", [](const PyRing& r) { return r.ptr->min_chern; })
      .def_property_readonly("kappa", [](const PyRing& r) { return to_string(r.ptr->kappa); })
      .def("basis",
           [](const PyRing& r) {
             std::vector<std::pair<std::string, int>> out;
             for (const auto& b : r.ptr->basis) out.emplace_back(b.label, b.degree);
             return out;
           })
      .def("generators",
           [](const PyRing& r) {
             std::vector<std::pair<std::string, int>> out;
             for (const auto& g : r.ptr->generators) out.emplace_back(g.name, g.degree);
             return out;
           })
      .def("element", &parse, py::arg("text"))
      .def("one", [](const PyRing& r) { return PyElement{AlgebraElement::unit(r.ptr)}; })
      .def("zero", [](const PyRing& r) { return PyElement{AlgebraElement::zero(r.ptr)}; })
      .def("info_json", [](const PyRing& r) { return dump(io::ring_info_json(r.ptr)); })
      .def("table_json", [](const PyRing& r) { return dump(io::table_json(r.ptr)); })
      .def("__repr__", [](const PyRing& r) { return "<Ring " + r.ptr->name + ">"; });

  py::class_<PyElement>(m, "Element")
      .def("__mul__",
           [](const PyElement& a, const PyElement& b) {
             return PyElement{multiply(a.value, b.value)};
           })
      .def("__add__",
           [](const PyElement& a, const PyElement& b) { return PyElement{a.value + b.value}; })
      .def("__sub__",
           [](const PyElement& a, const PyElement& b) { return PyElement{a.value - b.value}; })
      .def("__neg__", [](const PyElement& a) { return PyElement{-a.value}; })
      .def("__pow__", [](const PyElement& a, long k) { return PyElement{power(a.value, k)}; })
      .def("__eq__",
           [](const PyElement& a, const PyElement& b) { return a.value == b.value; })
      .def("__str__", [](const PyElement& a) { return algebra::render(a.value); })
      .def("__repr__",
           [](const PyElement& a) { return "<Element " + algebra::render(a.value) + ">"; })
      .def("is_zero", [](const PyElement& a) { return a.value.is_zero(); })
      .def("is_integral", [](const PyElement& a) { return a.value.is_integral(); })
      .def("valuation", [](const PyElement& a) { return to_string(algebra::valuation(a.value)); })
      .def("is_unit",
           [](const PyElement& a) {
             algebra::UnitCheck check = algebra::is_unit(a.value);
             return py::make_tuple(check.unit, check.witness
                                                   ? py::cast(PyElement{*check.witness})
                                                   : py::object(py::none()));
           })
      .def("inverse", [](const PyElement& a) { return PyElement{algebra::inverse(a.value)}; })
      .def("order",
           [](const PyElement& a, long cap) {
             return dump(io::order_report_json(algebra::element_order(a.value, cap)));
           },
           py::arg("cap") = 64)
      .def("json", [](const PyElement& a) { return dump(io::to_json(a.value)); });

  m.def("classify_units_json", [](const std::string& id, long bound) {
    return dump(io::unit_report_json(units::classify_top_units(catalog::make_ring(id), bound)));
  });
  m.def("units_order_json", [](const std::string& id, long bound, long cap) {
    io::json arr = io::json::array();
    for (const auto& rep : units::finite_order_verdict(catalog::make_ring(id), bound, cap))
      arr.push_back(io::order_report_json(rep));
    return dump(arr);
  });
  m.def("group_units_json",
        [](const std::string& id, int support, long long coeff, long exp_bound) {
          auto ring = catalog::make_ring(
              catalog::CatalogId::parse(id).with_mode(algebra::CoeffMode::enriched));
          grouporder::UnitSearchParams params{support, coeff, exp_bound};
          auto embedding = grouporder::embed_product_qenr(ring);
          return dump(io::group_unit_report_json(
              grouporder::classify_gr_units(embedding.group(), params)));
        });
  m.def("propd_check_json", [](const std::string& id) {
    return dump(io::property_d_json(propd::check_property_d(catalog::make_ring(id))));
  });
  m.def("verdict_json", [](const std::string& id, long bound, long cap) {
    return dump(io::verdict_json(propd::vanishing_verdict(catalog::make_ring(id), bound, cap)));
  });
  m.def("phi_sigma", [](const PyElement& enriched, int c1_vert, const std::string& coupling,
                        const PyRing& universal_target) {
    units::SectionData s{c1_vert, expr::parse_rational(coupling)};
    return PyElement{units::phi_sigma(enriched.value, s, universal_target.ptr)};
  });
  m.def("psi", [](const PyElement& x, const PyRing& lambda_target) {
    return PyElement{algebra::psi(x.value, lambda_target.ptr)};
  });
  m.def("psi_inv", [](const PyElement& x, const PyRing& universal_target) {
    return PyElement{algebra::psi_inv(x.value, universal_target.ptr)};
  });
  m.def("action_maslov_from_section", [](int c1_vert, const std::string& coupling,
                                         const std::string& kappa) {
    units::SectionData s{c1_vert, expr::parse_rational(coupling)};
    return to_string(units::action_maslov_from_section(s, expr::parse_rational(kappa)));
  });
  m.def("verify_paper_json", []() {
    io::json arr = io::json::array();
    for (const auto& r : qhforge::verify::run_all())
      arr.push_back(io::json{{"name", r.name},
                             {"passed", r.passed},
                             {"seconds", r.seconds},
                             {"detail", r.detail}});
    return dump(arr);
  });
}
