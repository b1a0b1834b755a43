#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "samuel/errors.hpp"
#include "samuel/theorem_lab.hpp"

namespace py = pybind11;
using namespace samuel;

namespace {

// pybind11 holders cannot point to const, so rings travel in a handle.
struct RingHandle {
  LocalRingPtr ptr;
};

std::vector<RingElement> parse_elements(const LocalRingPtr& R, const std::vector<std::string>& xs) {
  std::vector<RingElement> out;
  for (const auto& s : xs) out.push_back(R->parse_element(s));
  return out;
}

std::vector<Polynomial> parse_polys(const LocalRingPtr& R, const std::vector<std::string>& xs) {
  std::vector<Polynomial> out;
  for (const auto& s : xs) out.push_back(parse_polynomial(s, R->ambient()));
  return out;
}

RingHandle make_ring(const std::vector<std::string>& vars, const std::vector<std::string>& relations,
                     const std::string& field) {
  auto S = PolyRing::make(vars, parse_field_flag(field));
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(r, S));
  return {LocalRing::make(S, std::move(rel))};
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert-Samuel coefficients of parameter ideals in local rings";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (e.name() + ": " + e.what()).c_str());
    }
  });

  py::class_<RingHandle>(m, "LocalRing")
      .def_property_readonly("dimension", [](const RingHandle& R) { return R.ptr->dimension(); })
      .def_property_readonly("vars", [](const RingHandle& R) { return R.ptr->ambient()->names(); })
      .def_property_readonly("field", [](const RingHandle& R) { return R.ptr->ambient()->field().describe(); })
      .def("maximal_ideal", [](const RingHandle& R) { return R.ptr->maximal_ideal(); })
      .def("ideal", [](const RingHandle& R, const std::vector<std::string>& gens) {
        return R.ptr->ideal(parse_polys(R.ptr, gens));
      });

  py::class_<QuotientIdeal>(m, "Ideal")
      .def_property_readonly("generators", [](const QuotientIdeal& I) { return strings(I.generators()); })
      .def("contains", [](const QuotientIdeal& I, const std::string& f) { return I.contains(I.ring()->parse_element(f)); })
      .def("__repr__", &QuotientIdeal::to_string);

  m.def("ring", &make_ring, py::arg("vars"), py::arg("relations") = std::vector<std::string>{},
        py::arg("field") = "q", "R = k[vars]/(relations) localized at the origin.");
  m.def(
      "load_ring",
      [](const std::string& text, const std::string& ideal) {
        RingSpec spec = parse_ring_file(text);
        LocalRingPtr R = build_ring(spec);
        const auto* gens = spec.ideal(ideal);
        QuotientIdeal Q = gens ? R->ideal(parse_polys(R, *gens)) : R->maximal_ideal();
        return py::make_tuple(RingHandle{R}, Q);
      },
      py::arg("text"), py::arg("ideal") = "Q", "Parses ring-file text; returns (ring, ideal).");

  m.def(
      "groebner_basis",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& gens, const std::string& field) {
        auto S = PolyRing::make(vars, parse_field_flag(field));
        std::vector<Polynomial> ps;
        for (const auto& g : gens) ps.push_back(parse_polynomial(g, S));
        return strings(buchberger(ps));
      },
      py::arg("vars"), py::arg("generators"), py::arg("field") = "q");

  m.def(
      "local_colength", [](const QuotientIdeal& I, int n_cap) { return local_colength(I, {n_cap}); }, py::arg("ideal"),
      py::arg("n_cap") = 40);
  m.def(
      "hilbert_samuel_table",
      [](const QuotientIdeal& Q, int n_max, int n_cap) { return hilbert_samuel_table(Q, n_max, {n_cap}).values; },
      py::arg("ideal"), py::arg("n_max") = 12, py::arg("n_cap") = 40);
  m.def(
      "fit_coefficients",
      [](const std::vector<long>& values, int d) {
        HilbertCoefficients c = fit_coefficients(values, d);
        py::dict out;
        out["e"] = c.e;
        out["eta"] = c.eta;
        out["fit_window"] = py::make_tuple(c.fit_lo, c.fit_hi);
        return out;
      },
      py::arg("values"), py::arg("d"));
  m.def(
      "graded_series",
      [](const std::vector<long>& values, int d) {
        GradedSeries s = graded_series(values, d);
        py::dict out;
        out["h"] = s.h_values;
        out["numerator"] = s.numerator ? py::cast(*s.numerator) : py::none();
        std::string closed = s.closed_form();
        out["closed_form"] = closed.empty() ? py::none() : py::cast(closed);
        return out;
      },
      py::arg("values"), py::arg("d"));

  m.def(
      "is_regular_sequence",
      [](const RingHandle& R, const std::vector<std::string>& xs) {
        return is_regular_sequence(parse_elements(R.ptr, xs)).to_json().dump();
      },
      py::arg("ring"), py::arg("elements"));
  m.def(
      "is_d_sequence",
      [](const RingHandle& R, const std::vector<std::string>& xs) {
        return is_d_sequence(parse_elements(R.ptr, xs)).to_json().dump();
      },
      py::arg("ring"), py::arg("elements"));
  m.def(
      "is_superficial",
      [](const QuotientIdeal& Q, const std::string& x, int c_window, int n_max) {
        return is_superficial(Q, Q.ring()->parse_element(x), {c_window, n_max}).to_json().dump();
      },
      py::arg("ideal"), py::arg("element"), py::arg("c_window") = 3, py::arg("n_max") = 12);

  m.def(
      "ed_colon_formula",
      [](const QuotientIdeal& Q, const std::vector<std::string>& ys) {
        ColonFormula f = ed_colon_formula(Q, parse_elements(Q.ring(), ys));
        py::dict out;
        out["value"] = f.value;
        out["status"] = to_string(f.status);
        out["unmet"] = f.unmet;
        return out;
      },
      py::arg("ideal"), py::arg("elements"));
  m.def("idealization_coeffs", &idealization_coeffs, py::arg("d"), py::arg("t"), py::arg("e_R"), py::arg("e_D"));
  m.def(
      "idealization_cross_check",
      [](const RingHandle& R, const std::vector<std::string>& p, const std::vector<std::string>& q, int n_max) {
        return idealization_cross_check(R.ptr, parse_polys(R.ptr, p), parse_polys(R.ptr, q), n_max).to_json().dump();
      },
      py::arg("ring"), py::arg("p"), py::arg("q"), py::arg("n_max"));

  m.def(
      "run_corpus",
      [](std::optional<std::string> text, int n_max) {
        LabOptions o;
        o.n_max = o.vv_n_max = o.superficial.n_max = n_max;
        py::gil_scoped_release release;
        return run_corpus(text ? std::string_view(*text) : builtin_corpus(), o).to_json().dump();
      },
      py::arg("text") = py::none(), py::arg("n_max") = 12);
  m.def("builtin_corpus", [] { return std::string(builtin_corpus()); });
}
