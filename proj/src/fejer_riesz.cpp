#include "tetra/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tetra/errors.hpp"

namespace tetra {

TrigPolynomial::TrigPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.empty()) coeffs_[0] = cplx(coeffs_[0].real(), 0.0);
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < kTrimTol) coeffs_.pop_back();
}

double TrigPolynomial::at_angle(double theta) const {
  if (coeffs_.empty()) return 0.0;
  double v = coeffs_[0].real();
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    v += 2.0 * (coeffs_[j] * std::polar(1.0, static_cast<double>(j) * theta)).real();
  return v;
}

double TrigPolynomial::operator()(cplx lambda) const { return at_angle(std::arg(lambda)); }

Polynomial TrigPolynomial::to_polynomial(int n) const {
  if (n < order()) throw Error(ErrorKind::InvalidArgument, "shift smaller than trigonometric order");
  std::vector<cplx> v(2 * static_cast<std::size_t>(n) + 1);
  const auto nn = static_cast<std::size_t>(n);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    v[nn + j] = coeffs_[j];
    if (j > 0) v[nn - j] = std::conj(coeffs_[j]);
  }
  return Polynomial(std::move(v));
}

bool TrigPolynomial::is_zero() const noexcept { return coeffs_.empty(); }

TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b) {
  std::vector<cplx> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a[j] + b[j];
  return TrigPolynomial(std::move(v));
}

TrigPolynomial modulus_squared_on_circle(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::vector<cplx> v(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t k = 0; k + j < c.size(); ++k) v[j] += c[k + j] * std::conj(c[k]);
  return TrigPolynomial(std::move(v));
}

TrigPolynomial laurent_shift(const Polynomial& r, int n) {
  if (r.is_zero()) return {};
  if (r.degree() > 2 * n || max_coeff_diff(r, reflect(r, 2 * n)) >= 1e-10 * std::max(1.0, r.max_abs_coeff()))
    throw Error(ErrorKind::NotTwoNSymmetric, "royal-type polynomial is not 2n-symmetric");
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = r[static_cast<std::size_t>(n) + j];
  return TrigPolynomial(std::move(v));
}

CircleScan scan_circle(const TrigPolynomial& p, int samples) {
  CircleScan out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(), 0.0};
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const double v = p.at_angle(theta);
    out.min_value = std::min(out.min_value, v);
    if (v > out.max_value) {
      out.max_value = v;
      out.argmax_theta = theta;
    }
  }
  return out;
}

namespace {

double nonnegativity_slack(const CircleScan& s) {
  return 1e-10 * (1.0 + std::max(std::abs(s.min_value), std::abs(s.max_value)));
}

Polynomial derivative(const Polynomial& p) {
  std::vector<cplx> v;
  for (std::size_t j = 1; j < p.coeffs().size(); ++j) v.push_back(static_cast<double>(j) * p[j]);
  return Polynomial(std::move(v));
}

// A double root of P is a simple root of P'; Newton there recovers the
// precision lost when the pair splits.
cplx polish_double_root(const Polynomial& dp, const Polynomial& ddp, cplx z) {
  double res = std::abs(dp(z));
  for (int it = 0; it < 8 && res > 0.0; ++it) {
    const cplx den = ddp(z);
    if (den == cplx{}) break;
    const cplx cand = z - dp(z) / den;
    const double cand_res = std::abs(dp(cand));
    if (!(cand_res < res)) break;
    z = cand;
    res = cand_res;
  }
  return z / std::abs(z);
}

}  // namespace

bool is_nonnegative_on_circle(const TrigPolynomial& p, int samples) {
  const CircleScan s = scan_circle(p, samples);
  return s.min_value >= -nonnegativity_slack(s);
}

Polynomial factor(const TrigPolynomial& p, double circle_tol) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero trigonometric polynomial");
  const CircleScan scan = scan_circle(p);
  if (scan.min_value < -nonnegativity_slack(scan))
    throw Error(ErrorKind::NotNonnegativeOnCircle,
                "minimum sampled value " + std::to_string(scan.min_value));

  const int n = p.order();
  Polynomial monic_part = Polynomial::constant(1.0);
  if (n > 0) {
    const Polynomial big = p.to_polynomial(n);
    const Polynomial dbig = derivative(big);
    const Polynomial ddbig = derivative(dbig);
    const std::vector<cplx> all = raw_roots(big);
    std::vector<cplx> circle, off_circle;
    for (cplx r : all) (std::abs(std::abs(r) - 1.0) <= circle_tol ? circle : off_circle).push_back(r);
    if (circle.size() % 2 != 0)
      throw Error(ErrorKind::OddCircleRootOrder, "odd number of roots on the unit circle");

    std::vector<cplx> chosen;
    std::vector<bool> used(circle.size(), false);
    for (std::size_t i = 0; i < circle.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      std::size_t best = circle.size();
      for (std::size_t j = 0; j < circle.size(); ++j)
        if (!used[j] && (best == circle.size() || std::abs(circle[j] - circle[i]) < std::abs(circle[best] - circle[i])))
          best = j;
      if (best == circle.size())
        throw Error(ErrorKind::OddCircleRootOrder, "unpaired circle root");
      used[best] = true;
      const cplx mid = 0.5 * (circle[i] + circle[best]);
      chosen.push_back(polish_double_root(dbig, ddbig, mid / std::abs(mid)));
    }

    const std::size_t need = static_cast<std::size_t>(n) - chosen.size();
    std::sort(off_circle.begin(), off_circle.end(),
              [](cplx a, cplx b) { return std::abs(a) > std::abs(b); });
    chosen.insert(chosen.end(), off_circle.begin(), off_circle.begin() + static_cast<std::ptrdiff_t>(need));
    monic_part = Polynomial::from_roots(chosen);
  }

  const cplx peak = std::polar(1.0, scan.argmax_theta);
  Polynomial d = monic_part * (std::sqrt(scan.max_value) / std::abs(monic_part(peak)));
  for (cplx c : d.coeffs()) {
    if (std::abs(c) > kTrimTol) {
      d *= std::conj(c) / std::abs(c);
      break;
    }
  }

  const double bound = 1e-8 * (1.0 + std::max(std::abs(scan.min_value), std::abs(scan.max_value)));
  double worst = 0.0;
  for (int k = 0; k < kCircleSamples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / kCircleSamples;
    worst = std::max(worst, std::abs(std::norm(d(std::polar(1.0, theta))) - p.at_angle(theta)));
  }
  if (worst >= bound)
    throw Error(ErrorKind::FactorizationInaccurate,
                "|D|^2 misses the target by " + std::to_string(worst) + " on the circle");
  return d;
}

bool is_outer(const Polynomial& p, double tol) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero polynomial");
  for (cplx r : raw_roots(p))
    if (std::abs(r) < 1.0 - tol) return false;
  return true;
}

}  // namespace tetra
