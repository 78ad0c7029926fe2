#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "invcurve/cli/app.hpp"
#include "invcurve/cli/dsl.hpp"
#include "invcurve/darboux/darboux.hpp"
#include "invcurve/forms/forms.hpp"
#include "invcurve/lv/lv.hpp"
#include "invcurve/minimality/minimality.hpp"
#include "invcurve/numeric/numeric.hpp"

namespace py = pybind11;
using namespace invcurve;

namespace {

std::vector<std::string> strings(const std::vector<Scalar>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

std::vector<std::vector<std::string>> points(const std::vector<std::vector<Scalar>>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) out.push_back(strings(p));
  return out;
}

py::dict darboux_dict(const DarbouxReport& r) {
  py::list curves;
  for (const auto& c : r.curves) {
    py::dict d;
    d["polynomial"] = c.poly.to_string();
    d["cofactor"] = c.cofactor.to_string();
    d["field"] = c.field.to_string();
    curves.append(d);
  }
  py::list pencils;
  for (const auto& p : r.pencils) {
    std::vector<std::string> basis;
    for (const auto& b : p.basis) basis.push_back(b.to_string());
    py::dict d;
    d["cofactor"] = p.cofactor.to_string();
    d["basis"] = basis;
    pencils.append(d);
  }
  py::dict out;
  out["degree_bound"] = r.degree_bound;
  out["completeness"] = completeness_name(r.completeness);
  out["curves"] = curves;
  out["branching_conditions"] = strings(r.branching_conditions);
  out["pencils"] = pencils;
  out["caveats"] = r.caveats;
  return out;
}

VectorField load_system(const std::string& text, const std::map<std::string, std::string>& set) {
  std::map<std::string, mpq_class> values;
  for (const auto& [k, v] : set) {
    Scalar s = dsl::parse_scalar(v);
    if (!s.is_rational()) throw Error(ErrorKind::InvalidArgument, "value of " + k + " must be rational");
    values[k] = s.to_rational();
  }
  return dsl::to_vector_field(dsl::parse_system(text), values);
}

}  // namespace

PYBIND11_MODULE(_invcurve, m) {
  m.doc() = "Invariant algebraic curves and strong minimality of planar polynomial vector fields";

  static py::exception<Error> error(m, "InvcurveError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error((std::string(kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<VectorField>(m, "VectorField")
      .def_property_readonly("variables", &VectorField::variables)
      .def_property_readonly("components",
                             [](const VectorField& s) {
                               std::vector<std::string> out;
                               for (const auto& c : s.components()) out.push_back(c.to_string());
                               return out;
                             })
      .def("__str__", &VectorField::to_string)
      .def("__repr__", [](const VectorField& s) { return "<VectorField " + s.to_string() + ">"; });

  m.def("parse_system", &load_system, py::arg("text"), py::arg("set") = std::map<std::string, std::string>{});

  m.def("lv_field", [](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                       const std::string& variant) {
    auto v = variant == "2d" ? LVSystem::Variant::TwoD : LVSystem::Variant::Classical;
    return LVSystem::make(dsl::parse_scalar(a), dsl::parse_scalar(b), dsl::parse_scalar(c), dsl::parse_scalar(d), v)
        .field();
  }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("variant") = "classical");

  m.def("lie_derivative", [](const VectorField& s, const std::string& expr) {
    return lie_derivative(s, dsl::parse_ratfunc(expr, s.variables())).to_string();
  });

  m.def("is_invariant", [](const VectorField& s, const std::string& poly) -> std::optional<std::string> {
    auto k = is_invariant(s, dsl::parse_polynomial(poly, s.variables()));
    if (!k) return std::nullopt;
    return k->to_string();
  });

  m.def("singular_points", [](const VectorField& s) { return points(singular_points(s).points); });

  m.def("darboux_search", [](const VectorField& s, unsigned max_degree) { return darboux_dict(darboux_search(s, max_degree)); },
        py::arg("field"), py::arg("max_degree") = 2);

  m.def("check_strong_minimality", [](const VectorField& s, unsigned max_degree) {
    MinimalityReport r = check_strong_minimality(s, max_degree);
    py::dict out;
    out["verdict"] = verdict_name(r.verdict);
    out["witness"] = r.witness ? py::cast(strings(*r.witness)) : py::none();
    out["singular_points"] = points(r.singular_points);
    out["curves"] = darboux_dict(r.curves_checked);
    out["caveats"] = r.caveats;
    return out;
  }, py::arg("field"), py::arg("max_degree") = 3);

  m.def("is_invariant_form", [](const VectorField& s, const std::vector<std::pair<std::string, std::vector<std::string>>>& terms) {
    const auto& vars = s.variables();
    DForm w;
    bool first = true;
    for (const auto& [coef, names] : terms) {
      DForm::Index index;
      for (const auto& n : names) {
        auto it = std::find(vars.begin(), vars.end(), n);
        if (it == vars.end()) throw Error(ErrorKind::UnknownVariable, n);
        index.push_back(static_cast<unsigned>(it - vars.begin()));
      }
      DForm t = DForm::term(vars, dsl::parse_ratfunc(coef, vars), index);
      w = first ? t : w + t;
      first = false;
    }
    if (first) throw Error(ErrorKind::InvalidArgument, "empty form");
    return is_invariant_form(s, w);
  });

  m.def("enumerate_transform_solutions", [](const std::string& b1, const std::string& d1, const std::string& b2,
                                            const std::string& d2) {
    py::list out;
    for (const auto& sol : enumerate_transform_solutions(dsl::parse_scalar(b1), dsl::parse_scalar(d1),
                                                         dsl::parse_scalar(b2), dsl::parse_scalar(d2))) {
      py::dict d;
      d["case"] = case_name(sol.tag);
      d["e"] = sol.e.to_string();
      d["f"] = sol.f.to_string();
      d["constraints"] = strings(sol.constraints);
      out.append(d);
    }
    return out;
  });

  m.def("varma_solution", [](double a, double b, double c, double alpha, double beta, double t) {
    Point2 p = varma_solution(a, b, c, alpha, beta, t);
    return std::make_pair(p.x, p.y);
  });

  m.def("integrate_rk4", [](const VectorField& s, double x0, double y0, double t_end, double step) {
    Trajectory t = integrate_rk4(s, {x0, y0}, t_end, step);
    py::dict out;
    out["times"] = t.times;
    out["states"] = t.states;
    out["step"] = t.step;
    out["stop_reason"] = stop_reason_name(t.stop);
    return out;
  });

  m.def("first_integral_drift", [](const std::vector<std::array<double, 2>>& states, double b, double d) {
    Trajectory t;
    t.states = states;
    t.times.resize(states.size(), 0.0);
    return first_integral_drift(t, b, d);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
