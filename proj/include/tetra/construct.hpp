#pragma once

#include <optional>
#include <vector>

#include "tetra/tetra_function.hpp"

namespace tetra {

struct ConstructionSpec {
  std::vector<cplx> alpha1;  // zeros of x1
  std::vector<cplx> alpha2;  // zeros of x2
  std::vector<cplx> sigma;   // royal nodes, one entry per unit of multiplicity
  double t_plus = 1.0;
  cplx t{1.0, 0.0};
  cplx omega{1.0, 0.0};

  int n() const noexcept { return static_cast<int>(sigma.size()); }
};

inline constexpr double kDisjointTol = 1e-6;

/// Throws NodeOutsideClosedDisc, NodeZeroCollision or InvalidConstructionSpec.
void check_spec(const ConstructionSpec& spec, double disjoint_tol = kDisjointTol);

/// t_plus * prod (lambda - s)(1 - conj(s) lambda).
Polynomial build_royal_target(const std::vector<cplx>& sigma, double t_plus);

/// t * prod (lambda - a) over alpha1 * prod (1 - conj(a) lambda) over alpha2.
Polynomial build_e1(const std::vector<cplx>& alpha1, const std::vector<cplx>& alpha2, cplx t);

/// Builds R and E1, factors lambda^{-n} R + |E1|^2 = |D|^2 and returns
///   e1 = E1, e2 = E1^{~n}, d = conj(omega) D,
/// i.e. x = (omega E1/D, omega E1^{~n}/D, omega^2 D^{~n}/D). The result is
/// re-validated and its degree and royal polynomial are checked against n and
/// R; a mismatch raises ConstructionInconsistent.
TetraRational construct(const ConstructionSpec& spec);

struct RecoveredData {
  std::optional<RootMultiset> zeros1;  // empty optional: x1 vanishes identically
  std::optional<RootMultiset> zeros2;
  std::vector<RoyalNode> nodes;
};

/// Zeros of E1, E2 in the closed disc and the royal nodes.
/// Throws RoyalVarietyFunction when R_x = 0.
RecoveredData recover_data(const TetraRational& x, double cluster_tol = kNodeClusterTol,
                           double circle_tol = kCircleTol);

}  // namespace tetra
