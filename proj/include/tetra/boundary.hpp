#pragma once

#include <random>
#include <string_view>

#include "tetra/polynomial.hpp"

namespace tetra {

/// Default absolute tolerance on membership defects.
inline constexpr double kMembershipTol = 1e-9;

struct TetraPoint {
  cplx x1, x2, x3;
};

struct GammaPoint {
  cplx s, p;
};

/// Reported regions nest as DistinguishedBoundary < TopologicalBoundary <
/// closed tetrablock; classification reports the most specific one.
enum class TetraRegion { Interior, TopologicalBoundary, DistinguishedBoundary, Outside };

/// Regions of the symmetrized bidisc. ClosedGammaInteriorOnly flags a point
/// whose strict defect test passes while |s| exceeds 2; exact arithmetic
/// never produces it.
enum class GammaRegion { OpenG, GammaBoundaryTop, GammaDistinguished, ClosedGammaInteriorOnly, Outside };

struct Matrix2 {
  cplx a11, a12, a21, a22;
  cplx det() const { return a11 * a22 - a12 * a21; }
};

std::string_view to_string(TetraRegion r);
std::string_view to_string(GammaRegion r);

/// Psi(z, x) = (x3 z - x1) / (x2 z - 1). Throws PsiPole when |x2 z - 1| < 1e-12.
cplx psi(cplx z, const TetraPoint& x);

/// |x1 - conj(x2) x3| + |x2 - conj(x1) x3| - (1 - |x3|^2). Negative inside
/// the open tetrablock, zero on its topological boundary.
double tetra_defect(const TetraPoint& x);

/// |x1 - conj(x2) x3|: vanishes on the distinguished boundary.
double distinguished_defect(const TetraPoint& x);

TetraRegion classify_tetra(const TetraPoint& x, double tol = kMembershipTol);

/// Closed-tetrablock membership at tolerance tol.
inline bool in_closed_tetra(const TetraPoint& x, double tol = kMembershipTol) {
  return classify_tetra(x, tol) != TetraRegion::Outside;
}

/// |s - conj(s) p| - (1 - |p|^2).
double gamma_defect(const GammaPoint& g);

GammaRegion classify_gamma(const GammaPoint& g, double tol = kMembershipTol);

inline bool in_closed_gamma(const GammaPoint& g, double tol = kMembershipTol) {
  return classify_gamma(g, tol) != GammaRegion::Outside;
}

/// (a11, a22, det A).
TetraPoint pi_map(const Matrix2& a);

/// mu_Diag(A) <= 1, decided through closed-tetrablock membership of pi(A).
bool mu_diag_le_one(const Matrix2& a, double tol = kMembershipTol);

/// mu_Diag(A) by bisection on the scale r of X: the point
/// (r a11, r a22, r^2 det A) stays in the closed tetrablock exactly while
/// r <= 1/mu. Returns 0 when membership holds up to r = 1e6.
double mu_diag_value(const Matrix2& a, double rel_tol = 1e-12);

TetraPoint gamma_to_tetra(const GammaPoint& g);
/// (x1 + x2, x3).
GammaPoint tetra_to_gamma_sum(const TetraPoint& x);
/// (i x1 - i x2, x3).
GammaPoint tetra_to_gamma_diff(const TetraPoint& x);

// Samplers built on the parametrization
//   x1 = b1 + conj(b2) x3,  x2 = b2 + conj(b1) x3,  |b1| + |b2| <= 1,
// which covers the closed tetrablock exactly.

cplx random_in_disc(std::mt19937_64& rng, double radius = 1.0);
cplx random_on_circle(std::mt19937_64& rng);

/// Point of the tetrablock with the given third coordinate and |b1|+|b2| = mass.
TetraPoint tetra_point_from_betas(cplx beta1, cplx beta2, cplx x3);

/// Open tetrablock: |x3| < 1, |b1| + |b2| < 1 (kept away from the boundary by margin).
TetraPoint random_interior_tetra(std::mt19937_64& rng, double margin = 1e-3);
/// Closed tetrablock, including boundary points.
TetraPoint random_closed_tetra(std::mt19937_64& rng);
/// Distinguished boundary: |x3| = 1, x1 = conj(x2) x3, |x2| <= 1.
TetraPoint random_distinguished_tetra(std::mt19937_64& rng);
/// Closed symmetrized bidisc (z + w, z w) with |z|, |w| <= 1.
GammaPoint random_closed_gamma(std::mt19937_64& rng);
/// Haar-like random 2x2 unitary.
Matrix2 random_unitary(std::mt19937_64& rng);

}  // namespace tetra
