#include "tetra/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tetra {

std::string_view to_string(PerturbMethod m) {
  switch (m) {
    case PerturbMethod::EpsilonScaling: return "EpsilonScaling";
    case PerturbMethod::GPerturbEven: return "GPerturbEven";
    case PerturbMethod::GPerturbOdd: return "GPerturbOdd";
  }
  return "EpsilonScaling";
}

namespace {

double sym_scale(const TetraRational& x) {
  return std::max({1.0, x.e1().max_abs_coeff(), x.e2().max_abs_coeff(), x.d().max_abs_coeff()});
}

bool is_symmetric(const TetraRational& x) {
  return max_coeff_diff(x.e1(), x.e2()) <= 1e-10 * sym_scale(x);
}

}  // namespace

TetraRational convex_combine(const TetraRational& x, const TetraRational& y, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorKind::InvalidArgument, "t must lie in [0, 1]");
  if (x.n() != y.n()) throw Error(ErrorKind::ThirdComponentMismatch, "different degree bounds");

  // Least-squares ratio y.d = c x.d; c must come out real.
  cplx num{}, den{};
  for (std::size_t j = 0; j < x.d().coeffs().size(); ++j) {
    num += y.d()[j] * std::conj(x.d()[j]);
    den += std::norm(x.d()[j]);
  }
  const cplx c = num / den;
  const double ys = std::max(1.0, y.d().max_abs_coeff());
  if (std::abs(c) < 1e-300 || std::abs(c.imag()) > 1e-10 * std::abs(c) ||
      max_coeff_diff(y.d(), c.real() * x.d()) > 1e-10 * ys)
    throw Error(ErrorKind::ThirdComponentMismatch, "third components differ");

  const double inv = 1.0 / c.real();
  Polynomial e1 = t * x.e1() + ((1.0 - t) * inv) * y.e1();
  Polynomial e2 = t * x.e2() + ((1.0 - t) * inv) * y.e2();
  const auto mode = x.mode() == ValidationMode::Lenient || y.mode() == ValidationMode::Lenient
                        ? ValidationMode::Lenient
                        : ValidationMode::Strict;
  return TetraRational::validate(std::move(e1), std::move(e2), x.d(), x.n(), mode);
}

PerturbationResult scale_nonextreme(const TetraRational& x, double margin) {
  if (!(margin > 0.0 && margin < 1.0)) throw Error(ErrorKind::InvalidArgument, "margin must lie in (0, 1)");
  if (x.e1().is_zero() && x.e2().is_zero())
    return {x, x, 1.0, Polynomial{}, PerturbMethod::EpsilonScaling, "DegenerateZeroComponents"};

  const TypeNK type = type_nk(x);
  if (type.royal_variety) throw Error(ErrorKind::RoyalVarietyFunction, "royal-variety function");
  if (type.k > 0) throw Error(ErrorKind::CircleNodesPresent, "royal nodes on the circle force sup |x1| = 1");

  double sup = 0.0;
  for (cplx z : circle_points(kCircleSamples)) {
    const double dz = std::abs(x.d()(z));
    sup = std::max({sup, std::abs(x.e1()(z)) / dz, std::abs(x.e2()(z)) / dz});
  }
  if (sup >= 1.0 - 1e-12) throw Error(ErrorKind::NumericalSupAtOne, "sup |x1| on the circle is " + std::to_string(sup));
  const double eps = margin * (1.0 / sup - 1.0);
  return {TetraRational::validate((1.0 + eps) * x.e1(), (1.0 + eps) * x.e2(), x.d(), x.n(), x.mode()),
          TetraRational::validate((1.0 - eps) * x.e1(), (1.0 - eps) * x.e2(), x.d(), x.n(), x.mode()),
          eps,
          Polynomial{},
          PerturbMethod::EpsilonScaling,
          ""};
}

PerturbationResult perturb_nonextreme(const TetraRational& x) {
  const TypeNK type = type_nk(x);
  if (type.royal_variety) throw Error(ErrorKind::RoyalVarietyFunction, "royal-variety function");
  if (type.k == 0) return scale_nonextreme(x, 0.5);
  const int n = x.n();
  if (2 * type.k > n)
    throw Error(ErrorKind::ExtremalityNotDisproved, "2k > n: no perturbation of this form exists");

  std::vector<cplx> taus, interior, all;
  for (const RoyalNode& node : royal_nodes(x)) {
    for (int j = 0; j < node.multiplicity; ++j) {
      if (node.on_circle)
        taus.push_back(node.location / std::abs(node.location));
      else
        interior.push_back(node.location);
      all.push_back(node.location);
    }
  }
  const int k = static_cast<int>(taus.size());
  const int m = n / 2;

  Polynomial g;
  PerturbMethod method;
  if (n % 2 == 0) {
    cplx lead = 1.0;
    for (cplx tau : taus) lead *= std::conj(tau);
    g = Polynomial::monomial(m - k, lead);
    method = PerturbMethod::GPerturbEven;
  } else {
    cplx w2 = -std::conj(taus.front());
    for (cplx tau : taus) w2 *= std::conj(tau) * std::conj(tau);
    g = Polynomial::monomial(m - k, std::sqrt(w2)) * Polynomial{-taus.front(), 1.0};
    method = PerturbMethod::GPerturbOdd;
  }
  for (cplx tau : taus) g = g * Polynomial{-tau, 1.0} * Polynomial{-tau, 1.0};
  if (!is_n_symmetric(g, n, 1e-10 * std::max(1.0, g.max_abs_coeff())))
    throw Error(ErrorKind::NotSymmetric, "perturbation polynomial is not n-symmetric");

  // Positive constant r in R_x = r prod Q_sigma, read at the circle point
  // farthest from every node.
  const std::vector<cplx> coarse = circle_points(64);
  cplx l0 = coarse.front();
  double best = -1.0;
  for (cplx z : coarse) {
    double dist = 4.0;
    for (cplx s : all) dist = std::min(dist, std::abs(z - s));
    if (dist > best) {
      best = dist;
      l0 = z;
    }
  }
  double prod = 1.0;
  for (cplx s : all) prod *= std::norm(l0 - s);
  const double r = (std::pow(l0, -n) * royal_polynomial(x)(l0)).real() / prod;

  const std::vector<cplx> pts = circle_points(kCircleSamples);
  double big_m = std::numeric_limits<double>::infinity();
  double e_sup = 0.0, g_sup = 0.0;
  for (cplx z : pts) {
    double q = 1.0;
    for (cplx a : interior) q *= std::norm(z - a);
    big_m = std::min(big_m, q);
    e_sup = std::max(e_sup, std::abs(x.e1()(z)));
    g_sup = std::max(g_sup, std::abs(g(z)));
  }

  const double c = method == PerturbMethod::GPerturbEven ? 1.0 : 2.0;
  double t;
  if (e_sup == 0.0)
    t = std::sqrt(r * big_m / (2.0 * c * g_sup));
  else
    t = std::min(2.0 * e_sup / g_sup, r * big_m / (8.0 * c * e_sup));
  t *= 0.9;

  const Polynomial tg = t * g;
  return {TetraRational::validate(x.e1() + tg, x.e2() + tg, x.d(), n, x.mode()),
          TetraRational::validate(x.e1() - tg, x.e2() - tg, x.d(), n, x.mode()),
          t,
          g,
          method,
          ""};
}

bool certify_extreme_symmetric(const TetraRational& x) {
  if (!is_symmetric(x)) return false;
  const TypeNK type = type_nk(x);
  if (type.royal_variety) return false;
  return 2 * type.k > type.n;
}

Polynomial gamma_royal(const TetraRational& x) {
  if (!is_symmetric(x)) throw Error(ErrorKind::NotSymmetric, "E1 != E2");
  return 4.0 * (reflect(x.d(), x.n()) * x.d() - x.e1() * x.e1());
}

double midpoint_error(const PerturbationResult& r, const TetraRational& x) {
  const Polynomial m1 = 0.5 * (r.x_plus.e1() + r.x_minus.e1());
  const Polynomial m2 = 0.5 * (r.x_plus.e2() + r.x_minus.e2());
  return std::max({max_coeff_diff(m1, x.e1()), max_coeff_diff(m2, x.e2()),
                   max_coeff_diff(r.x_plus.d(), x.d()), max_coeff_diff(r.x_minus.d(), x.d())});
}

}  // namespace tetra
