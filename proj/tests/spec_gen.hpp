#pragma once

#include <random>

#include "oracles.hpp"
#include "tetra/construct.hpp"

namespace testgen {

inline tetra::ConstructionSpec worked_spec() {
  tetra::ConstructionSpec s;
  s.alpha2 = {0.5};
  s.sigma = {0.0};
  s.t_plus = 7.0 / 4.0;
  s.t = std::sqrt(2.0);
  return s;
}

/// Random spec with n nodes, `circle` of them on the circle, interior zeros,
/// every point at least `sep` from every other.
inline tetra::ConstructionSpec random_spec(std::mt19937_64& rng, int n, int circle = 0, double sep = 0.05) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  tetra::ConstructionSpec s;
  std::vector<tetra::cplx> used;
  while (static_cast<int>(s.sigma.size()) < circle) {
    const tetra::cplx z = std::polar(1.0, 2.0 * std::numbers::pi * u(rng));
    bool ok = true;
    for (auto w : used) ok = ok && std::abs(z - w) >= sep;
    if (ok) {
      s.sigma.push_back(z);
      used.push_back(z);
    }
  }
  const auto inner = oracle::separated_points(rng, static_cast<std::size_t>(n - circle), 0.95, sep, used);
  s.sigma.insert(s.sigma.end(), inner.begin(), inner.end());
  used.insert(used.end(), inner.begin(), inner.end());
  const auto zeros = oracle::separated_points(rng, static_cast<std::size_t>(n), 0.95, sep, used);
  const auto k1 = static_cast<std::size_t>(rng() % static_cast<unsigned>(n + 1));
  s.alpha1.assign(zeros.begin(), zeros.begin() + static_cast<std::ptrdiff_t>(k1));
  s.alpha2.assign(zeros.begin() + static_cast<std::ptrdiff_t>(k1), zeros.end());
  s.t_plus = 0.25 + 2.0 * u(rng);
  s.t = std::polar(0.3 + 1.5 * u(rng), 2.0 * std::numbers::pi * u(rng));
  s.omega = std::polar(1.0, 2.0 * std::numbers::pi * u(rng));
  return s;
}

}  // namespace testgen
