#include "bergerspec/berger_spectra.hpp"
#include "bergerspec/geodesic_slices.hpp"
#include "bergerspec/harmonic_spectra.hpp"
#include "bergerspec/jacobi_index.hpp"
#include "bergerspec/page_constants.hpp"
#include "bergerspec/rational.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bergerspec;

// Rationals cross the boundary as "p/q" strings; the python package wraps them in Fraction.

namespace {

py::dict report_dict(const IndexNullityReport& r) {
  py::dict d;
  d["parameter"] = r.parameter;
  d["index"] = r.index;
  d["nullity"] = r.nullity;
  d["shift"] = r.shift;
  d["truncation_bound"] = r.truncation_bound;
  d["certified"] = r.certified;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bergerspec, m) {
  m.doc() = "Laplace and Jacobi spectra of round and Berger spheres";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<PageTranscriptionError>(m, "PageTranscriptionError", PyExc_ValueError);

  m.def("sphere_multiplicity", &sphere_multiplicity, py::arg("k"), py::arg("p"));
  m.def("sphere_spectrum", [](unsigned p, std::uint64_t k_max) {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> rows;
    for (const auto& e : sphere_spectrum(p, k_max)) rows.emplace_back(e.degree, e.eigenvalue, e.multiplicity);
    return rows;
  }, py::arg("p"), py::arg("k_max"));

  m.def("distinct_spectrum_at", [](const std::string& x, std::size_t count) {
    std::vector<std::tuple<std::string, std::uint64_t, std::string>> rows;
    for (const auto& lv : distinct_spectrum_at(parse_rational(x), count)) {
      rows.emplace_back(to_string(lv.coefficient), lv.multiplicity(), lv.source());
    }
    return rows;
  }, py::arg("x"), py::arg("count"));

  m.def("branch_crossing", [](const std::string& a1, const std::string& b1, const std::string& a2,
                              const std::string& b2) -> std::optional<std::string> {
    const auto c = branch_crossing(AffineBranch{parse_rational(a1), parse_rational(b1), std::nullopt},
                                   AffineBranch{parse_rational(a2), parse_rational(b2), std::nullopt});
    if (!c) return std::nullopt;
    return to_string(*c);
  });

  m.def("kth_distinct_piecewise", [](std::size_t i, const std::string& x_max) {
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> rows;
    for (const auto& s : kth_distinct_piecewise(i, parse_rational(x_max))) {
      rows.emplace_back(to_string(s.lo), to_string(s.hi), to_string(s.branch.a), to_string(s.branch.b));
    }
    return rows;
  }, py::arg("i"), py::arg("x_max"));

  m.def("tanno_lambda1", &tanno_lambda1, py::arg("t"));
  m.def("epsilon_lambda1", &epsilon_lambda1, py::arg("epsilon"));
  m.def("berger_spectrum", [](double t, std::size_t count) {
    std::vector<std::tuple<double, std::uint64_t, std::string>> rows;
    for (const auto& e : berger_spectrum(t, count)) rows.emplace_back(e.value, e.multiplicity, e.source);
    return rows;
  }, py::arg("t"), py::arg("count"));

  m.def("cp2_lambda1", &cp2_lambda1, py::arg("r"));
  m.def("cp2_lambda1_exact", [](const std::string& r2) { return to_string(cp2_lambda1_exact(parse_rational(r2))); },
        py::arg("r_squared"));
  m.def("cp2_index_nullity", [](double r, std::size_t depth) { return report_dict(cp2_index_nullity(r, depth)); },
        py::arg("r"), py::arg("depth") = kDefaultDepth);

  m.def("page_shifted_lambda1", [](double r) { return page_shifted_lambda1(r); }, py::arg("r"));
  m.def("page_transition_roots", [](double tol) {
    const auto roots = page_transition_roots(tol);
    return std::make_pair(roots.r1, roots.r2);
  }, py::arg("tol") = 1e-6);
  m.def("page_index_nullity", [](double r, std::size_t depth) { return report_dict(page_index_nullity(r, depth)); },
        py::arg("r"), py::arg("depth") = kDefaultDepth);
  m.def("page_scalar_curvature", [] { return page_constants().scalar_curvature(); });

  m.def("adjunction_genus", &adjunction_genus, py::arg("self_intersection"), py::arg("c1_dot_curve"));
  m.def("complex_curve_index_nullity", [](const std::string& name) {
    ComplexCurve c;
    if (name == "degree1") {
      c = ComplexCurve::Degree1;
    } else if (name == "degree2") {
      c = ComplexCurve::Degree2;
    } else if (name == "hyperplane") {
      c = ComplexCurve::LinearHyperplane;
    } else {
      throw std::invalid_argument("unknown curve " + name);
    }
    const auto r = complex_curve_index_nullity(c);
    return std::make_pair(r.index, r.nullity);
  }, py::arg("curve"));
}
