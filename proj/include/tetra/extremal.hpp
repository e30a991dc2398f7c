#pragma once

#include <string>
#include <string_view>

#include "tetra/tetra_function.hpp"

namespace tetra {

enum class PerturbMethod { EpsilonScaling, GPerturbEven, GPerturbOdd };

std::string_view to_string(PerturbMethod m);

/// x = (x_plus + x_minus) / 2 with both halves validated and sharing D.
struct PerturbationResult {
  TetraRational x_plus;
  TetraRational x_minus;
  double t_used;   // epsilon for scaling, t for the g-perturbation
  Polynomial g;    // zero for scaling
  PerturbMethod method;
  std::string note;
};

/// t x + (1 - t) y over a common D. y.d() must be a real nonzero multiple of
/// x.d(); otherwise the third components differ and ThirdComponentMismatch is thrown.
TetraRational convex_combine(const TetraRational& x, const TetraRational& y, double t);

/// ((1 +- eps) E1, (1 +- eps) E2, D) with eps = margin (1/s* - 1), where s* is
/// the circle sup of |x1|. Requires no royal node on the circle.
PerturbationResult scale_nonextreme(const TetraRational& x, double margin = 0.5);

/// (E1 +- t g, E2 +- t g, D) with g n-symmetric and vanishing to second order
/// at the circle royal nodes. Requires 2k <= n; k = 0 is handed to
/// scale_nonextreme.
PerturbationResult perturb_nonextreme(const TetraRational& x);

/// E1 = E2 and 2k > n. False means "not certified".
bool certify_extreme_symmetric(const TetraRational& x);

/// 4 D D^{~n} - (2 E1)^2 for symmetric x. Throws NotSymmetric otherwise.
Polynomial gamma_royal(const TetraRational& x);

/// Largest coefficient deviation of (x_plus + x_minus)/2 from x.
double midpoint_error(const PerturbationResult& r, const TetraRational& x);

}  // namespace tetra
