#include "tetra/json_io.hpp"

namespace tetra::io {

// + 0.0 folds -0.0
json to_json(cplx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json to_json(const Polynomial& p) {
  json a = json::array();
  for (cplx c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const TetraPoint& x) { return {{"x1", to_json(x.x1)}, {"x2", to_json(x.x2)}, {"x3", to_json(x.x3)}}; }

json to_json(const GammaPoint& g) { return {{"s", to_json(g.s)}, {"p", to_json(g.p)}}; }

json to_json(const TetraRational& x) {
  return {{"n", x.n()}, {"E1", to_json(x.e1())}, {"E2", to_json(x.e2())}, {"D", to_json(x.d())}};
}

json to_json(const RoyalNode& node) {
  return {{"location", to_json(node.location)},
          {"raw_order", node.raw_order},
          {"multiplicity", node.multiplicity},
          {"on_circle", node.on_circle}};
}

json to_json(const ConstructionSpec& spec) {
  auto list = [](const std::vector<cplx>& v) {
    json a = json::array();
    for (cplx z : v) a.push_back(to_json(z));
    return a;
  };
  return {{"alpha1", list(spec.alpha1)}, {"alpha2", list(spec.alpha2)}, {"sigma", list(spec.sigma)},
          {"t_plus", spec.t_plus},       {"t", to_json(spec.t)},        {"omega", to_json(spec.omega)}};
}

cplx complex_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw json::type_error::create(302, "complex number must be [re, im]", &j);
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::vector<cplx> complex_list_from(const json& j) {
  if (!j.is_array()) throw json::type_error::create(302, "expected an array of complex numbers", &j);
  std::vector<cplx> out;
  for (const auto& e : j) out.push_back(complex_from(e));
  return out;
}

Polynomial polynomial_from(const json& j) { return Polynomial(complex_list_from(j)); }

TetraPoint tetra_point_from(const json& j) {
  if (j.is_array()) {
    if (j.size() != 3) throw json::type_error::create(302, "tetrablock point needs three coordinates", &j);
    return {complex_from(j[0]), complex_from(j[1]), complex_from(j[2])};
  }
  return {complex_from(j.at("x1")), complex_from(j.at("x2")), complex_from(j.at("x3"))};
}

GammaPoint gamma_point_from(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw json::type_error::create(302, "Gamma point needs two coordinates", &j);
    return {complex_from(j[0]), complex_from(j[1])};
  }
  return {complex_from(j.at("s")), complex_from(j.at("p"))};
}

ConstructionSpec spec_from(const json& j) {
  ConstructionSpec s;
  s.alpha1 = complex_list_from(j.value("alpha1", json::array()));
  s.alpha2 = complex_list_from(j.value("alpha2", json::array()));
  s.sigma = complex_list_from(j.value("sigma", json::array()));
  s.t_plus = j.value("t_plus", 1.0);
  if (j.contains("t")) s.t = complex_from(j.at("t"));
  if (j.contains("omega")) s.omega = complex_from(j.at("omega"));
  return s;
}

RawTriple raw_triple_from(const json& j) {
  return {polynomial_from(j.at("E1")), polynomial_from(j.at("E2")), polynomial_from(j.at("D")), j.at("n").get<int>()};
}

TetraRational tetra_rational_from(const json& j, ValidationMode mode) {
  RawTriple r = raw_triple_from(j);
  return TetraRational::validate(std::move(r.e1), std::move(r.e2), std::move(r.d), r.n, mode);
}

json analysis(const TetraRational& x) {
  json out;
  out["degree"] = degree(x);
  const TypeNK type = type_nk(x);
  if (type.royal_variety) {
    out["type"] = "royal-variety";
    out["royal_nodes"] = json::array();
    return out;
  }
  out["type"] = json::array({type.n, type.k});
  json nodes = json::array();
  for (const RoyalNode& node : royal_nodes(x)) nodes.push_back(to_json(node));
  out["royal_nodes"] = nodes;
  return out;
}

}  // namespace tetra::io
