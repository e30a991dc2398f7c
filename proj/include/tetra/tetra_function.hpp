#pragma once

#include <string>
#include <vector>

#include "tetra/boundary.hpp"
#include "tetra/errors.hpp"
#include "tetra/fejer_riesz.hpp"
#include "tetra/polynomial.hpp"

namespace tetra {

/// Strict: D has no zero on the closed disc. Lenient: zeros on the circle are
/// tolerated (the function then has degree below n).
enum class ValidationMode { Strict, Lenient };

struct ConditionCheck {
  int index;          // 1..7, numbering of the structure conditions
  std::string name;
  ErrorKind kind;     // error reported when this check fails
  bool passed;
  double measured;
  double threshold;
};

struct ValidationReport {
  std::vector<ConditionCheck> checks;

  bool ok() const noexcept;
  /// Failed checks, in order.
  std::vector<ConditionCheck> failures() const;
};

class ValidationError : public Error {
 public:
  ValidationError(ErrorKind kind, const std::string& what, ValidationReport report)
      : Error(kind, what), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Evaluates the seven structure conditions on (E1, E2, D, n):
///   1 degrees <= n            2 D nonzero on the disc
///   3 |x3| = 1 on the circle  4 |x1| <= 1 on the disc   5 |x2| <= 1 on the disc
///   6 |Ei| <= |D| on the circle
///   7 E1 = E2^{~n}
/// Never throws for well-formed input.
ValidationReport check_conditions(const Polynomial& e1, const Polynomial& e2, const Polynomial& d, int n,
                                  ValidationMode mode = ValidationMode::Strict,
                                  int samples = kCircleSamples);

/// x = (E1/D, E2/D, D^{~n}/D). Instances only exist in validated form.
class TetraRational {
 public:
  /// Throws ValidationError listing every violated condition.
  static TetraRational validate(Polynomial e1, Polynomial e2, Polynomial d, int n,
                                ValidationMode mode = ValidationMode::Strict);

  const Polynomial& e1() const noexcept { return e1_; }
  const Polynomial& e2() const noexcept { return e2_; }
  const Polynomial& d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  ValidationMode mode() const noexcept { return mode_; }

 private:
  TetraRational(Polynomial e1, Polynomial e2, Polynomial d, int n, ValidationMode mode)
      : e1_(std::move(e1)), e2_(std::move(e2)), d_(std::move(d)), n_(n), mode_(mode) {}

  Polynomial e1_, e2_, d_;
  int n_ = 0;
  ValidationMode mode_ = ValidationMode::Strict;
};

/// Throws InvalidArgument for |lambda| > 1 + 1e-9 and DenominatorVanishes
/// when |D(lambda)| < 1e-13.
TetraPoint eval_function(const TetraRational& x, cplx lambda);

/// Blaschke degree of x3: zeros of D^{~n} in the open disc.
int degree(const TetraRational& x);

/// Winding number of x3 around the circle, counterclockwise. Throws
/// SamplingTooCoarse when two consecutive samples differ in argument by pi or more.
int winding_number(const TetraRational& x, int samples = kCircleSamples);

/// R_x = D^{~n} D - E1 E2.
Polynomial royal_polynomial(const TetraRational& x);

/// R_x vanishes identically relative to |D|^2.
bool is_royal_variety(const TetraRational& x);

struct RoyalNode {
  cplx location;
  int raw_order;
  int multiplicity;  // raw_order inside the disc, raw_order / 2 on the circle
  bool on_circle;
};

inline constexpr double kNodeClusterTol = 1e-6;

/// Zeros of R_x in the closed disc. Throws RoyalVarietyFunction when R_x = 0
/// and OddCircleRootOrder for an odd circle cluster.
std::vector<RoyalNode> royal_nodes(const TetraRational& x, double cluster_tol = kNodeClusterTol,
                                   double circle_tol = kCircleTol);

struct TypeNK {
  int n = 0;
  int k = 0;
  bool royal_variety = false;
};

TypeNK type_nk(const TetraRational& x);

struct BlaschkeSpec {
  std::vector<cplx> zeros;
  cplx unimodular_constant{1.0, 0.0};
};

struct SuperficialSpec {
  cplx beta1, beta2;
  BlaschkeSpec x3;
};

/// (b1 + conj(b2) x3, b2 + conj(b1) x3, x3) for a finite Blaschke product x3.
/// D = conj(sqrt c) prod (1 - conj(a) lambda); when n_bound exceeds the number
/// of zeros, D and D^{~n} share the padding (1 + lambda)^{extra} and the result
/// is validated leniently.
TetraRational superficial_build(const SuperficialSpec& spec, int n_bound);

/// |defect| < tol at `samples` points on each circle of radius 0.1, 0.5, 0.9.
bool is_superficial(const TetraRational& x, int samples = 256, double tol = 1e-10);

/// max |Psi(omega, x(lambda)) - k| over sampled disc points, with
/// omega = conj(b2)/|b2| and k = b1/|b1|.
double psi_omega_check(const TetraRational& x, const SuperficialSpec& spec, int samples = 256);

/// (s/2, s/2, p) with s = s_num / denom and p = denom^{~n} / denom.
/// Throws GammaInnerPrecondition when (s_num, denom) is not Gamma-inner data.
TetraRational from_gamma_inner(const Polynomial& s_num, const Polynomial& denom, int n);

struct TracePoint {
  double theta;
  TetraPoint x;
  double defect;  // |x1 - conj(x2) x3|
};

std::vector<TracePoint> circle_trace(const TetraRational& x, int samples);

/// Uniform samples e^{2 pi i k / count}.
std::vector<cplx> circle_points(int count);

}  // namespace tetra
