#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetra/boundary.hpp"
#include "tetra/construct.hpp"
#include "tetra/extremal.hpp"
#include "tetra/fejer_riesz.hpp"
#include "tetra/tetra_function.hpp"

namespace py = pybind11;
using namespace tetra;

namespace {

using Coeffs = std::vector<cplx>;

ValidationMode mode_of(bool lenient) { return lenient ? ValidationMode::Lenient : ValidationMode::Strict; }

py::dict nodes_dict(const RoyalNode& nd) {
  py::dict d;
  d["location"] = nd.location;
  d["raw_order"] = nd.raw_order;
  d["multiplicity"] = nd.multiplicity;
  d["on_circle"] = nd.on_circle;
  return d;
}

py::list node_list(const std::vector<RoyalNode>& nodes) {
  py::list out;
  for (const auto& nd : nodes) out.append(nodes_dict(nd));
  return out;
}

py::object roots_or_none(const std::optional<RootMultiset>& m) {
  if (!m) return py::none();
  py::list out;
  for (const Root& r : m->entries) out.append(py::make_tuple(r.location, r.order));
  return out;
}

py::dict perturbation_dict(const PerturbationResult& r, const TetraRational& x) {
  py::dict d;
  d["x_plus"] = r.x_plus;
  d["x_minus"] = r.x_minus;
  d["t"] = r.t_used;
  d["g"] = r.g.coeffs();
  d["method"] = std::string(to_string(r.method));
  d["note"] = r.note;
  d["midpoint_error"] = midpoint_error(r, x);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational tetra-inner functions";

  static py::exception<Error> tetra_error(m, "TetraError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (kind, message)
      py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.what());
      PyErr_SetObject(tetra_error.ptr(), args.ptr());
    }
  });

  m.def("classify_tetra", [](cplx x1, cplx x2, cplx x3, double tol) {
    return std::string(to_string(classify_tetra({x1, x2, x3}, tol)));
  }, py::arg("x1"), py::arg("x2"), py::arg("x3"), py::arg("tol") = kMembershipTol);
  m.def("tetra_defect", [](cplx x1, cplx x2, cplx x3) { return tetra_defect({x1, x2, x3}); });
  m.def("classify_gamma", [](cplx s, cplx p, double tol) {
    return std::string(to_string(classify_gamma({s, p}, tol)));
  }, py::arg("s"), py::arg("p"), py::arg("tol") = kMembershipTol);
  m.def("mu_diag_value", [](cplx a11, cplx a12, cplx a21, cplx a22) { return mu_diag_value({a11, a12, a21, a22}); });
  m.def("mu_diag_le_one", [](cplx a11, cplx a12, cplx a21, cplx a22) { return mu_diag_le_one({a11, a12, a21, a22}); });

  m.def("modulus_squared_on_circle", [](const Coeffs& p) { return modulus_squared_on_circle(Polynomial(p)).coeffs(); },
        "Coefficients c_0..c_n of |p|^2 on the circle (c_{-j} = conj c_j).");
  m.def("fejer_riesz", [](const Coeffs& c) { return factor(TrigPolynomial(c)).coeffs(); }, py::arg("trig_coeffs"),
        "Outer D with |D|^2 equal to the trigonometric polynomial c_0 + 2 Re sum c_j l^j.");
  m.def("roots", [](const Coeffs& p, double tol) {
    std::vector<std::pair<cplx, int>> out;
    for (const Root& r : roots(Polynomial(p), tol).entries) out.emplace_back(r.location, r.order);
    return out;
  }, py::arg("coeffs"), py::arg("cluster_tol") = kClusterTol);

  py::class_<TetraRational>(m, "TetraRational")
      .def_static("validate", [](const Coeffs& e1, const Coeffs& e2, const Coeffs& d, int n, bool lenient) {
        return TetraRational::validate(Polynomial(e1), Polynomial(e2), Polynomial(d), n, mode_of(lenient));
      }, py::arg("e1"), py::arg("e2"), py::arg("d"), py::arg("n"), py::arg("lenient") = false)
      .def_property_readonly("e1", [](const TetraRational& x) { return x.e1().coeffs(); })
      .def_property_readonly("e2", [](const TetraRational& x) { return x.e2().coeffs(); })
      .def_property_readonly("d", [](const TetraRational& x) { return x.d().coeffs(); })
      .def_property_readonly("n", &TetraRational::n)
      .def_property_readonly("lenient", [](const TetraRational& x) { return x.mode() == ValidationMode::Lenient; })
      .def("__call__", [](const TetraRational& x, cplx l) {
        const TetraPoint p = eval_function(x, l);
        return py::make_tuple(p.x1, p.x2, p.x3);
      })
      .def("__repr__", [](const TetraRational& x) { return "<TetraRational n=" + std::to_string(x.n()) + ">"; });

  m.def("degree", [](const TetraRational& x) { return degree(x); });
  m.def("winding_number", [](const TetraRational& x, int samples) { return winding_number(x, samples); },
        py::arg("x"), py::arg("samples") = 4096);
  m.def("royal_polynomial", [](const TetraRational& x) { return royal_polynomial(x).coeffs(); });
  m.def("royal_nodes", [](const TetraRational& x) { return node_list(royal_nodes(x)); });
  m.def("type_nk", [](const TetraRational& x) -> py::object {
    const TypeNK t = type_nk(x);
    if (t.royal_variety) return py::str("royal-variety");
    return py::make_tuple(t.n, t.k);
  });
  m.def("superficial_build", [](cplx beta1, cplx beta2, const Coeffs& zeros, cplx c, int n) {
    return superficial_build({beta1, beta2, {zeros, c}}, n < 0 ? static_cast<int>(zeros.size()) : n);
  }, py::arg("beta1"), py::arg("beta2"), py::arg("zeros"), py::arg("c") = cplx{1.0, 0.0}, py::arg("n") = -1);
  m.def("is_superficial", [](const TetraRational& x) { return is_superficial(x); });
  m.def("from_gamma_inner", [](const Coeffs& s, const Coeffs& denom, int n) {
    return from_gamma_inner(Polynomial(s), Polynomial(denom), n);
  });

  m.def("construct", [](const Coeffs& alpha1, const Coeffs& alpha2, const Coeffs& sigma, double t_plus, cplx t, cplx omega) {
    return construct({alpha1, alpha2, sigma, t_plus, t, omega});
  }, py::arg("alpha1"), py::arg("alpha2"), py::arg("sigma"), py::arg("t_plus") = 1.0, py::arg("t") = cplx{1.0, 0.0},
     py::arg("omega") = cplx{1.0, 0.0});
  m.def("recover_data", [](const TetraRational& x) {
    const RecoveredData r = recover_data(x);
    py::dict d;
    d["zeros1"] = roots_or_none(r.zeros1);
    d["zeros2"] = roots_or_none(r.zeros2);
    d["nodes"] = node_list(r.nodes);
    return d;
  });

  m.def("convex_combine", &convex_combine, py::arg("x"), py::arg("y"), py::arg("t"));
  m.def("scale_nonextreme", [](const TetraRational& x, double margin) {
    return perturbation_dict(scale_nonextreme(x, margin), x);
  }, py::arg("x"), py::arg("margin") = 0.5);
  m.def("perturb_nonextreme", [](const TetraRational& x) { return perturbation_dict(perturb_nonextreme(x), x); });
  m.def("certify_extreme_symmetric", &certify_extreme_symmetric);
  m.def("gamma_royal", [](const TetraRational& x) { return gamma_royal(x).coeffs(); });
}
