#include "tetra/construct.hpp"

#include <algorithm>
#include <cmath>

namespace tetra {

void check_spec(const ConstructionSpec& spec, double disjoint_tol) {
  for (cplx s : spec.sigma)
    if (std::abs(s) > 1.0 + 1e-12) throw Error(ErrorKind::NodeOutsideClosedDisc, "royal node outside the closed disc");
  for (const auto* list : {&spec.alpha1, &spec.alpha2})
    for (cplx a : *list)
      if (std::abs(a) > 1.0 + 1e-12) throw Error(ErrorKind::InvalidConstructionSpec, "zero outside the closed disc");
  if (spec.alpha1.size() + spec.alpha2.size() != spec.sigma.size())
    throw Error(ErrorKind::InvalidConstructionSpec, "zero counts must add up to the number of royal nodes");
  if (!(spec.t_plus > 0.0) || !std::isfinite(spec.t_plus))
    throw Error(ErrorKind::InvalidConstructionSpec, "t_plus must be positive");
  if (!(std::abs(spec.t) > 0.0)) throw Error(ErrorKind::InvalidConstructionSpec, "t must be nonzero");
  if (std::abs(std::abs(spec.omega) - 1.0) >= 1e-12)
    throw Error(ErrorKind::InvalidConstructionSpec, "omega must be unimodular");

  for (const auto* list : {&spec.alpha1, &spec.alpha2}) {
    for (cplx a : *list) {
      if (std::abs(std::abs(a) - 1.0) > 1e-12) continue;
      for (cplx s : spec.sigma)
        if (std::abs(s - a) <= disjoint_tol)
          throw Error(ErrorKind::NodeZeroCollision, "royal node coincides with a zero on the circle");
    }
  }
}

Polynomial build_royal_target(const std::vector<cplx>& sigma, double t_plus) {
  if (!(t_plus > 0.0)) throw Error(ErrorKind::InvalidConstructionSpec, "t_plus must be positive");
  Polynomial r = Polynomial::constant(t_plus);
  for (cplx s : sigma) {
    if (std::abs(s) > 1.0 + 1e-12) throw Error(ErrorKind::NodeOutsideClosedDisc, "royal node outside the closed disc");
    r = r * Polynomial{-s, 1.0} * Polynomial{1.0, -std::conj(s)};
  }
  return r;
}

Polynomial build_e1(const std::vector<cplx>& alpha1, const std::vector<cplx>& alpha2, cplx t) {
  if (!(std::abs(t) > 0.0)) throw Error(ErrorKind::InvalidConstructionSpec, "t must be nonzero");
  Polynomial e = Polynomial::constant(t);
  for (cplx a : alpha1) e = e * Polynomial{-a, 1.0};
  for (cplx a : alpha2) e = e * Polynomial{1.0, -std::conj(a)};
  return e;
}

TetraRational construct(const ConstructionSpec& spec) {
  check_spec(spec);
  const int n = spec.n();
  const Polynomial r = build_royal_target(spec.sigma, spec.t_plus);
  const Polynomial e1 = build_e1(spec.alpha1, spec.alpha2, spec.t);
  const Polynomial d = factor(laurent_shift(r, n) + modulus_squared_on_circle(e1));

  Polynomial dd = std::conj(spec.omega) * d;
  try {
    TetraRational x = TetraRational::validate(e1, reflect(e1, n), std::move(dd), n);
    if (degree(x) != n)
      throw Error(ErrorKind::ConstructionInconsistent, "degree " + std::to_string(degree(x)) + " != n");
    const double drift = max_coeff_diff(royal_polynomial(x), r);
    if (drift > 1e-8 * std::max(1.0, r.max_abs_coeff()))
      throw Error(ErrorKind::ConstructionInconsistent, "royal polynomial off by " + std::to_string(drift));
    return x;
  } catch (const ValidationError& e) {
    throw Error(ErrorKind::ConstructionInconsistent, e.what());
  }
}

namespace {

std::optional<RootMultiset> disc_zeros(const Polynomial& p, double cluster_tol, double circle_tol) {
  if (p.is_zero()) return std::nullopt;
  RootMultiset all = roots(p, cluster_tol);
  RootMultiset out;
  out.cluster_tol = cluster_tol;
  for (const Root& r : all.entries)
    if (std::abs(r.location) <= 1.0 + circle_tol) out.entries.push_back(r);
  return out;
}

}  // namespace

RecoveredData recover_data(const TetraRational& x, double cluster_tol, double circle_tol) {
  RecoveredData out;
  out.nodes = royal_nodes(x, cluster_tol, circle_tol);
  out.zeros1 = disc_zeros(x.e1(), cluster_tol, circle_tol);
  out.zeros2 = disc_zeros(x.e2(), cluster_tol, circle_tol);
  return out;
}

}  // namespace tetra
