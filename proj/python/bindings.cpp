#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khcurves/detection.hpp"
#include "khcurves/examples.hpp"
#include "khcurves/json_io.hpp"
#include "khcurves/pairing.hpp"

namespace py = pybind11;

namespace {

// Python sees complexes and multicurves as JSON text in the file format;
// the package wrapper turns that into dicts.
khc::Complex complex_arg(const std::string& s) { return khc::complex_from_json(khc::parse_json(s)); }
khc::Multicurve curve_arg(const std::string& s) { return khc::multicurve_from_json(khc::parse_json(s)); }

}  // namespace

PYBIND11_MODULE(_khcurves, m) {
  m.doc() = "Bar-Natan complexes, immersed curves and their pairings";

  py::register_exception<khc::FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<khc::NonStabilizing>(m, "NonStabilizing", PyExc_RuntimeError);
  py::register_exception<khc::UnsupportedPairing>(m, "UnsupportedPairing", PyExc_RuntimeError);
  py::register_exception<khc::UnsupportedFamily>(m, "UnsupportedFamily", PyExc_ValueError);

  m.def("example_names", [] {
    std::vector<std::string> out;
    for (const auto& e : khc::examples()) out.push_back(e.name);
    return out;
  });
  m.def("example", [](const std::string& name) { return std::string(khc::find_example(name).json); });
  m.def("compile", [](const std::string& family) {
    return khc::to_json(khc::compile(khc::parse_family_name(family)).complex).dump();
  });

  m.def("validate", [](const std::string& x) { return khc::to_json(khc::validate_complex(complex_arg(x))).dump(); });
  m.def("reduce", [](const std::string& x) { return khc::to_json(khc::gauss_reduce(complex_arg(x))).dump(); });
  m.def("cone", [](const std::string& x) { return khc::to_json(khc::cone_h(complex_arg(x))).dump(); });

  m.def(
      "mor_homology",
      [](const std::string& x, const std::string& y, std::optional<int> cap) {
        std::map<std::pair<int, int>, int> out;
        for (const auto& [deg, r] : khc::mor_homology(complex_arg(x), complex_arg(y), cap).ranks) out[deg] = r;
        return out;
      },
      py::arg("x"), py::arg("y"), py::arg("cap") = py::none());
  m.def("torsion", [](const std::string& x, const std::string& y) {
    const auto cx = complex_arg(x);
    const auto cy = complex_arg(y);
    return khc::to_json(cx, cy, khc::torsion_witness(cx, cy)).dump();
  });
  m.def("geometric_dim", [](const std::string& arc_slope, const std::string& curve) {
    const auto arc = khc::CurveComponent::arc(khc::Slope::parse(arc_slope));
    std::int64_t total = 0;
    for (const auto& g : curve_arg(curve).components) total += khc::geometric_dim(arc, g);
    return total;
  });

  m.def("detect_split", [](const std::string& x) { return khc::to_json(khc::detect_split(complex_arg(x))).dump(); });
  m.def(
      "ecsc_scan", [](const std::string& c, int n_max) { return khc::to_json(khc::ecsc_scan(curve_arg(c), n_max)).dump(); },
      py::arg("curve"), py::arg("n_max") = 8);
  m.def(
      "agccc_report",
      [](const std::string& c, int n_max, std::optional<int> mu) {
        return khc::to_json(khc::agccc_report(curve_arg(c), n_max, mu)).dump();
      },
      py::arg("curve"), py::arg("n_max") = 8, py::arg("mu") = py::none());
}
