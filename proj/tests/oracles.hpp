#pragma once

// Reference computations used by the tests. They deliberately avoid the
// library's own routines so that agreement is evidence, not tautology.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx power_sum(const std::vector<cplx>& c, cplx z) {
  cplx acc{};
  for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * std::pow(z, static_cast<int>(j));
  return acc;
}

/// lead * prod (z - r), expanded one factor at a time from the top.
inline std::vector<cplx> expand(const std::vector<cplx>& roots, cplx lead = 1.0) {
  std::vector<cplx> c{lead};
  for (cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, cplx{});
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] -= r * c[j];
      next[j + 1] += c[j];
    }
    c = next;
  }
  return c;
}

/// Closed tetrablock membership from the definition: 1 - x1 z - x2 w + x3 z w
/// has no zero with |z|, |w| < 1. For |x1| <= 1 this reduces to
/// |x2 - x3 z| <= |1 - x1 z| on the circle.
inline double determinant_margin(cplx x1, cplx x2, cplx x3, int samples = 2048) {
  double worst = std::abs(x1) - 1.0;
  for (int k = 0; k < samples; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
    worst = std::max(worst, std::abs(x2 - x3 * z) - std::abs(1.0 - x1 * z));
  }
  return worst;
}

inline double circle_max(const std::vector<cplx>& c, int samples = 4096) {
  double m = 0.0;
  for (int k = 0; k < samples; ++k)
    m = std::max(m, std::abs(power_sum(c, std::polar(1.0, 2.0 * std::numbers::pi * k / samples))));
  return m;
}

inline cplx in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline cplx in_annulus(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(lo + (hi - lo) * u(rng), 2.0 * std::numbers::pi * u(rng));
}

/// Points with pairwise distance >= sep drawn from the disc of given radius.
inline std::vector<cplx> separated_points(std::mt19937_64& rng, std::size_t count, double radius, double sep,
                                          const std::vector<cplx>& avoid = {}) {
  std::vector<cplx> out;
  while (out.size() < count) {
    const cplx z = in_disc(rng, radius);
    bool ok = true;
    for (cplx w : out) ok = ok && std::abs(z - w) >= sep;
    for (cplx w : avoid) ok = ok && std::abs(z - w) >= sep;
    if (ok) out.push_back(z);
  }
  return out;
}

}  // namespace oracle
