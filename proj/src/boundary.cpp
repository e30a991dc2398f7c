#include "tetra/boundary.hpp"

#include <cmath>
#include <numbers>

#include "tetra/errors.hpp"

namespace tetra {

std::string_view to_string(TetraRegion r) {
  switch (r) {
    case TetraRegion::Interior: return "Interior";
    case TetraRegion::TopologicalBoundary: return "TopologicalBoundary";
    case TetraRegion::DistinguishedBoundary: return "DistinguishedBoundary";
    case TetraRegion::Outside: return "Outside";
  }
  return "Outside";
}

std::string_view to_string(GammaRegion r) {
  switch (r) {
    case GammaRegion::OpenG: return "OpenG";
    case GammaRegion::GammaBoundaryTop: return "GammaBoundaryTop";
    case GammaRegion::GammaDistinguished: return "GammaDistinguished";
    case GammaRegion::ClosedGammaInteriorOnly: return "ClosedGammaInteriorOnly";
    case GammaRegion::Outside: return "Outside";
  }
  return "Outside";
}

cplx psi(cplx z, const TetraPoint& x) {
  const cplx den = x.x2 * z - 1.0;
  if (std::abs(den) < 1e-12) throw Error(ErrorKind::PsiPole, "x2 * z = 1");
  return (x.x3 * z - x.x1) / den;
}

double tetra_defect(const TetraPoint& x) {
  return std::abs(x.x1 - std::conj(x.x2) * x.x3) + std::abs(x.x2 - std::conj(x.x1) * x.x3) -
         (1.0 - std::norm(x.x3));
}

double distinguished_defect(const TetraPoint& x) { return std::abs(x.x1 - std::conj(x.x2) * x.x3); }

TetraRegion classify_tetra(const TetraPoint& x, double tol) {
  const double defect = tetra_defect(x);
  if (defect < -tol) return TetraRegion::Interior;
  if (defect <= tol && std::abs(x.x1) <= 1.0 + tol && std::abs(x.x2) <= 1.0 + tol) {
    if (std::abs(std::abs(x.x3) - 1.0) <= tol) return TetraRegion::DistinguishedBoundary;
    return TetraRegion::TopologicalBoundary;
  }
  return TetraRegion::Outside;
}

double gamma_defect(const GammaPoint& g) {
  return std::abs(g.s - std::conj(g.s) * g.p) - (1.0 - std::norm(g.p));
}

GammaRegion classify_gamma(const GammaPoint& g, double tol) {
  const double defect = gamma_defect(g);
  const bool s_bounded = std::abs(g.s) <= 2.0 + tol;
  if (defect < -tol) return s_bounded ? GammaRegion::OpenG : GammaRegion::ClosedGammaInteriorOnly;
  if (defect <= tol && s_bounded) {
    if (std::abs(std::abs(g.p) - 1.0) <= tol && std::abs(g.s - std::conj(g.s) * g.p) <= tol)
      return GammaRegion::GammaDistinguished;
    return GammaRegion::GammaBoundaryTop;
  }
  return GammaRegion::Outside;
}

TetraPoint pi_map(const Matrix2& a) { return {a.a11, a.a22, a.det()}; }

bool mu_diag_le_one(const Matrix2& a, double tol) { return in_closed_tetra(pi_map(a), tol); }

double mu_diag_value(const Matrix2& a, double rel_tol) {
  const cplx det = a.det();
  auto inside = [&](double r) {
    // 1 - |x3|^2 carries ~1e-16 of rounding; a zero tolerance would let it
    // flip membership where the true defect is of cubic order.
    return in_closed_tetra(TetraPoint{r * a.a11, r * a.a22, r * r * det}, 1e-14);
  };
  constexpr double cap = 1e6;
  if (inside(cap)) return 0.0;
  double lo = 0.0, hi = cap;
  for (int it = 0; it < 200 && hi - lo > rel_tol * hi; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    (inside(mid) ? lo : hi) = mid;
  }
  return 2.0 / (lo + hi);
}

TetraPoint gamma_to_tetra(const GammaPoint& g) { return {0.5 * g.s, 0.5 * g.s, g.p}; }

GammaPoint tetra_to_gamma_sum(const TetraPoint& x) { return {x.x1 + x.x2, x.x3}; }

GammaPoint tetra_to_gamma_diff(const TetraPoint& x) {
  constexpr cplx i{0.0, 1.0};
  return {i * x.x1 - i * x.x2, x.x3};
}

cplx random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

cplx random_on_circle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

TetraPoint tetra_point_from_betas(cplx beta1, cplx beta2, cplx x3) {
  return {beta1 + std::conj(beta2) * x3, beta2 + std::conj(beta1) * x3, x3};
}

namespace {

std::pair<cplx, cplx> split_mass(std::mt19937_64& rng, double mass) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double a = mass * u(rng);
  return {std::polar(a, 2.0 * std::numbers::pi * u(rng)),
          std::polar(mass - a, 2.0 * std::numbers::pi * u(rng))};
}

}  // namespace

TetraPoint random_interior_tetra(std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const cplx x3 = random_in_disc(rng, 1.0 - margin);
  const auto [b1, b2] = split_mass(rng, (1.0 - margin) * u(rng));
  return tetra_point_from_betas(b1, b2, x3);
}

TetraPoint random_closed_tetra(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double pick = u(rng);
  const cplx x3 = pick < 0.15 ? random_on_circle(rng) : random_in_disc(rng);
  const double mass = pick > 0.7 ? 1.0 : u(rng);
  const auto [b1, b2] = split_mass(rng, mass);
  return tetra_point_from_betas(b1, b2, x3);
}

TetraPoint random_distinguished_tetra(std::mt19937_64& rng) {
  const cplx x3 = random_on_circle(rng);
  const cplx x2 = random_in_disc(rng);
  return {std::conj(x2) * x3, x2, x3};
}

GammaPoint random_closed_gamma(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const cplx z = u(rng) < 0.2 ? random_on_circle(rng) : random_in_disc(rng);
  const cplx w = u(rng) < 0.2 ? random_on_circle(rng) : random_in_disc(rng);
  return {z + w, z * w};
}

Matrix2 random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double theta = std::asin(std::sqrt(u(rng)));
  const cplx a = std::polar(std::cos(theta), 2.0 * std::numbers::pi * u(rng));
  const cplx b = std::polar(std::sin(theta), 2.0 * std::numbers::pi * u(rng));
  const cplx phase = random_on_circle(rng);
  return {phase * a, phase * b, -phase * std::conj(b), phase * std::conj(a)};
}

}  // namespace tetra
