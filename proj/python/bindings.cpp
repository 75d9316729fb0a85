// Thin pybind11 layer. Results cross the boundary as JSON text; the Python
// package turns them into dicts and exact strings into Fraction where asked.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "veechfib/congruence.hpp"
#include "veechfib/families.hpp"
#include "veechfib/finite_field.hpp"
#include "veechfib/serialize.hpp"

namespace py = pybind11;
using namespace veechfib;

namespace {

DegreeMode mode_of(bool closure) { return closure ? DegreeMode::closure : DegreeMode::theorem; }

SurfaceKind sporadic_kind(const std::string& which) {
  if (which == "E7") return SurfaceKind::E7;
  if (which == "E8") return SurfaceKind::E8;
  fail(ErrorKind::invalid_argument, "sporadic family must be E7 or E8, got " + which);
}

CurveDataStore store_for(const std::string& data_path, bool zeta) {
  CurveDataStore s;
  if (!data_path.empty()) s.load_csv(data_path);
  if (zeta) s.set_plugin(zeta_plugin());
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() { return py::object(py::exception<Error>(m, "VeechfibError")); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  m.def("polygon", [](int n, long p, bool closure) { return to_json(polygon_family(n, p, mode_of(closure))).dump(); },
        py::arg("n"), py::arg("p"), py::arg("closure") = false);
  m.def(
      "sporadic",
      [](const std::string& which, long p, bool closure) {
        return to_json(sporadic_family(sporadic_kind(which), p, mode_of(closure))).dump();
      },
      py::arg("which"), py::arg("p"), py::arg("closure") = false);
  m.def(
      "weierstrass",
      [](long D, long p, const std::string& data, bool zeta, bool closure) {
        return to_json(weierstrass_family(D, p, store_for(data, zeta), mode_of(closure))).dump();
      },
      py::arg("D"), py::arg("p"), py::arg("data") = "", py::arg("zeta") = false, py::arg("closure") = false);
  m.def("elliptic", [](long mm) { return to_json(elliptic_family(mm)).dump(); }, py::arg("m"));
  m.def(
      "prototypes",
      [](long D) {
        Json j = Json::array();
        for (const auto& pr : enumerate_prototypes(D)) j.push_back(to_json(pr));
        return j.dump();
      },
      py::arg("D"));
  m.def(
      "tv_build",
      [](const std::string& family) {
        auto model = build_surface(SurfaceFamily::parse(family));
        Json j = to_json(model);
        j["structural_checks"] = to_json(run_structural_checks(model));
        return j.dump();
      },
      py::arg("family"));
  m.def(
      "admissible_primes",
      [](const std::string& tag, long bound) {
        std::vector<std::pair<long, bool>> out;
        for (const auto& ap : admissible_primes(family_spec_from_tag(tag), bound)) out.emplace_back(ap.p, ap.exceptional);
        return out;
      },
      py::arg("family"), py::arg("bound"));
  m.def(
      "group_order",
      [](long p, const std::string& modulus, const std::string& lambda, std::uint64_t cap) {
        auto field = std::make_shared<const FiniteFieldSpec>(p, parse_int_polynomial(modulus));
        auto lam = lambda.empty() ? FFElement::generator(field) : parse_field_element(field, lambda);
        return group_closure_order(unipotent_pair(field, lam), cap);
      },
      py::arg("p"), py::arg("modulus"), py::arg("lam") = "", py::arg("cap") = kDefaultClosureCap);
  m.def("zeta_curve_euler_characteristic", [](long D) { return to_string(zeta_curve_euler_characteristic(D)); },
        py::arg("D"));
}
