#pragma once

#include <vector>

#include "tetra/polynomial.hpp"

namespace tetra {

/// Number of uniform circle samples used for non-negativity and accuracy checks.
inline constexpr int kCircleSamples = 4096;
/// Default distance to the unit circle below which a root counts as a circle root.
inline constexpr double kCircleTol = 1e-6;

/// Hermitian trigonometric polynomial
///   p(lambda) = c0 + sum_{j=1..n} (c_j lambda^j + conj(c_j) lambda^{-j}),
/// real-valued on the unit circle. Only c0..cn are stored; c0 is kept real.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(std::vector<cplx> coeffs);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  /// Highest stored index; -1 for the empty (zero) polynomial.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  cplx operator[](std::size_t j) const noexcept { return j < coeffs_.size() ? coeffs_[j] : cplx{}; }

  /// Value at e^{i theta}.
  double at_angle(double theta) const;
  /// Value at a point of the unit circle (the real part of the Laurent sum).
  double operator()(cplx lambda) const;

  /// lambda^n p(lambda) as an ordinary polynomial of degree <= 2n.
  Polynomial to_polynomial(int n) const;

  bool is_zero() const noexcept;

  friend TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b);

 private:
  std::vector<cplx> coeffs_;
};

/// |p(lambda)|^2 on the circle: c_j = sum_k p_{k+j} conj(p_k).
TrigPolynomial modulus_squared_on_circle(const Polynomial& p);

/// lambda^{-n} R(lambda) for a 2n-symmetric R of degree <= 2n: c_j = R_{n+j}.
/// Throws NotTwoNSymmetric when R fails the symmetry check at 1e-10.
TrigPolynomial laurent_shift(const Polynomial& r, int n);

struct CircleScan {
  double min_value;
  double max_value;
  double argmax_theta;
};

/// Minimum and maximum of p over `samples` uniform circle points.
CircleScan scan_circle(const TrigPolynomial& p, int samples = kCircleSamples);

/// p >= -1e-10 (1 + max |p|) at every sample.
bool is_nonnegative_on_circle(const TrigPolynomial& p, int samples = kCircleSamples);

/// Fejer-Riesz factor: an outer polynomial D of degree <= n with |D|^2 = p on
/// the circle, normalized so its first nonzero coefficient is real positive.
///
/// The roots of lambda^n p(lambda) come in pairs (r, 1/conj r); one from each
/// pair with |r| >= 1 is kept. Roots within circle_tol of the circle are
/// paired by nearest neighbour and contribute once per pair. The scalar factor
/// is fixed at the sampled circle point where p is largest.
///
/// Throws NotNonnegativeOnCircle, OddCircleRootOrder, or
/// FactorizationInaccurate when the reconstruction misses p by more than
/// 1e-8 (1 + max |p|) on the circle.
Polynomial factor(const TrigPolynomial& p, double circle_tol = kCircleTol);

/// No root of p has modulus < 1 - tol. p must be nonzero.
bool is_outer(const Polynomial& p, double tol = 1e-9);

}  // namespace tetra
