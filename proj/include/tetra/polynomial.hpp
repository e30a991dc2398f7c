#pragma once

#include <complex>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace tetra {

using cplx = std::complex<double>;

/// Coefficients below this magnitude at the top of a polynomial are dropped.
inline constexpr double kTrimTol = 1e-14;
/// Default distance below which numerically computed roots are merged.
inline constexpr double kClusterTol = 1e-7;
/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Complex polynomial, coefficients in ascending powers. The zero polynomial
/// has an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cplx> coeffs);
  Polynomial(std::initializer_list<cplx> coeffs);

  static Polynomial constant(cplx c);
  static Polynomial monomial(int power, cplx c = 1.0);
  /// lead * prod (lambda - r) over the given roots.
  static Polynomial from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of lambda^j; zero past the stored degree.
  cplx operator[](std::size_t j) const noexcept {
    return j < coeffs_.size() ? coeffs_[j] : cplx{};
  }
  /// Horner evaluation.
  cplx operator()(cplx lambda) const noexcept;

  double max_abs_coeff() const noexcept;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(cplx scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= -1.0; }
  friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
  friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<cplx> coeffs_;
};

inline cplx eval(const Polynomial& p, cplx lambda) { return p(lambda); }

/// p^{~n}(lambda) = lambda^n conj(p(1/conj(lambda))): coefficient j of the
/// result is conj(coefficient n-j of p). Throws DegreeExceedsReflectionIndex
/// when deg p > n.
Polynomial reflect(const Polynomial& p, int n);

/// p^v(lambda) = conj(p(conj(lambda))): coefficients conjugated.
Polynomial conj_flip(const Polynomial& p);

/// deg p <= n and p^{~n} agrees with p coefficientwise to within tol.
bool is_n_symmetric(const Polynomial& p, int n, double tol);

/// Largest coefficientwise deviation, padding the shorter with zeros.
double max_coeff_diff(const Polynomial& a, const Polynomial& b);

struct Root {
  cplx location;
  int order = 1;
};

struct RootMultiset {
  std::vector<Root> entries;
  double cluster_tol = kClusterTol;

  int total_order() const noexcept;
  /// Monic polynomial with these roots.
  Polynomial expand() const;
};

/// Every root of lambda^0..lambda^n coefficients, without clustering. Roots at
/// the origin from exact low-order zeros are returned first.
std::vector<cplx> raw_roots(const Polynomial& p);

/// Roots with multiplicity. Computed from the companion matrix of the monic
/// normalization, Newton-polished, then merged by single-linkage clustering
/// at cluster_tol. Throws ZeroPolynomialHasAllRoots on the zero polynomial.
RootMultiset roots(const Polynomial& p, double cluster_tol = kClusterTol);

/// An m-fold root is a simple root of the (m-1)th derivative: Newton there
/// from z, never moving further than max_move.
cplx polish_multiple_root(const Polynomial& p, cplx z, int order, double max_move);

/// Single-linkage clustering of points at distance < tol. Each cluster is
/// replaced by its centroid with order equal to its size.
RootMultiset cluster_points(std::span<const cplx> points, double tol);

}  // namespace tetra
