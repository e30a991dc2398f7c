#include "tetra/tetra_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace tetra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double circle_sup(const Polynomial& p, const std::vector<cplx>& pts) {
  double m = 0.0;
  for (cplx z : pts) m = std::max(m, std::abs(p(z)));
  return m;
}

// Cluster centroids: a repeated circle root splits by ~sqrt(eps) but its
// centroid stays on the circle.
double min_root_modulus(const Polynomial& p) {
  if (p.degree() <= 0) return kInf;
  double m = kInf;
  for (const Root& r : roots(p, 1e-6).entries) m = std::min(m, std::abs(r.location));
  return m;
}

// Coefficient noise in R splits a double circle root into two simple roots
// ~sqrt(noise / |R''|) apart, which for crowded nodes is far beyond
// cluster_tol. Odd near-circle clusters are paired greedily, nearest first,
// and merged when R really vanishes at the polished centroid.
constexpr double kCircleBand = 1e-2;
constexpr double kCircleMerge = 1e-2;
constexpr double kCircleResidual = 1e-8;

RootMultiset merge_circle_splits(const Polynomial& r, std::vector<Root> entries) {
  RootMultiset out;
  std::vector<Root> odd;
  for (const Root& e : entries) {
    if (e.order % 2 != 0 && std::abs(std::abs(e.location) - 1.0) < kCircleBand)
      odd.push_back(e);
    else
      out.entries.push_back(e);
  }
  double scale = 0.0;
  for (cplx c : r.coeffs()) scale += std::abs(c);

  std::vector<bool> done(odd.size(), false);
  while (true) {
    std::size_t bi = odd.size(), bj = odd.size();
    double best = kCircleMerge;
    for (std::size_t i = 0; i < odd.size(); ++i)
      for (std::size_t j = i + 1; j < odd.size(); ++j)
        if (!done[i] && !done[j] && std::abs(odd[i].location - odd[j].location) < best) {
          best = std::abs(odd[i].location - odd[j].location);
          bi = i;
          bj = j;
        }
    if (bi == odd.size()) break;
    const int order = odd[bi].order + odd[bj].order;
    const cplx mid = (static_cast<double>(odd[bi].order) * odd[bi].location +
                      static_cast<double>(odd[bj].order) * odd[bj].location) / static_cast<double>(order);
    const cplx z = polish_multiple_root(r, mid, order, kCircleMerge);
    done[bi] = done[bj] = true;
    if (std::abs(r(z)) <= kCircleResidual * scale) {
      out.entries.push_back({z, order});
    } else {
      out.entries.push_back(odd[bi]);
      out.entries.push_back(odd[bj]);
    }
  }
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (!done[i]) out.entries.push_back(odd[i]);
  return out;
}

ConditionCheck make_check(int index, const char* name, ErrorKind kind, double measured, double threshold,
                          bool passed) {
  return ConditionCheck{index, name, kind, passed, measured, threshold};
}

}  // namespace

std::vector<cplx> circle_points(int count) {
  std::vector<cplx> out(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / count);
  return out;
}

bool ValidationReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.passed; });
}

std::vector<ConditionCheck> ValidationReport::failures() const {
  std::vector<ConditionCheck> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

ValidationReport check_conditions(const Polynomial& e1, const Polynomial& e2, const Polynomial& d, int n,
                                  ValidationMode mode, int samples) {
  ValidationReport rep;
  auto& out = rep.checks;

  const int top = std::max({e1.degree(), e2.degree(), d.degree()});
  const bool degrees_ok = top <= n;
  out.push_back(make_check(1, "degree bound", ErrorKind::DegreeBound, top == kZeroDegree ? 0.0 : top, n,
                           degrees_ok));

  if (d.is_zero()) {
    out.push_back(make_check(2, "D nonvanishing on the disc", ErrorKind::DVanishesInDisc, 0.0, 1.0, false));
    out.push_back(make_check(3, "|x3| = 1 on the circle", ErrorKind::ReflectionMismatch, kInf, 1e-9, false));
    out.push_back(make_check(4, "|x1| <= 1 on the disc", ErrorKind::ModulusDomination, kInf, 1e-9, false));
    out.push_back(make_check(5, "|x2| <= 1 on the disc", ErrorKind::ModulusDomination, kInf, 1e-9, false));
    out.push_back(make_check(6, "|E1|, |E2| <= |D| on the circle", ErrorKind::ModulusDomination, kInf, 1e-9, false));
  } else {
    const double rmin = min_root_modulus(d);
    const double need = mode == ValidationMode::Strict ? 1.0 + 1e-10 : 1.0 - 1e-9;
    out.push_back(make_check(2, "D nonvanishing on the disc", ErrorKind::DVanishesInDisc, rmin, need, rmin >= need));

    const std::vector<cplx> pts = circle_points(samples);
    const double scale = std::max(circle_sup(d, pts), 1e-300);

    double x3_dev = kInf;
    if (degrees_ok) {
      const Polynomial dr = reflect(d, n);
      x3_dev = 0.0;
      for (cplx z : pts) x3_dev = std::max(x3_dev, std::abs(std::abs(dr(z)) - std::abs(d(z))) / scale);
    }
    out.push_back(make_check(3, "|x3| = 1 on the circle", ErrorKind::ReflectionMismatch, x3_dev, 1e-9, x3_dev < 1e-9));

    // Interior radii; the circle itself is condition 6.
    double ex1 = -kInf, ex2 = -kInf;
    for (double rad : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      for (int k = 0; k < 64; ++k) {
        const cplx z = std::polar(rad, 2.0 * std::numbers::pi * k / 64);
        const double dz = std::abs(d(z));
        ex1 = std::max(ex1, (std::abs(e1(z)) - dz) / scale);
        ex2 = std::max(ex2, (std::abs(e2(z)) - dz) / scale);
      }
    }
    out.push_back(make_check(4, "|x1| <= 1 on the disc", ErrorKind::ModulusDomination, ex1, 1e-9, ex1 <= 1e-9));
    out.push_back(make_check(5, "|x2| <= 1 on the disc", ErrorKind::ModulusDomination, ex2, 1e-9, ex2 <= 1e-9));

    double ec = -kInf;
    for (cplx z : pts) {
      const double dz = std::abs(d(z));
      ec = std::max({ec, (std::abs(e1(z)) - dz) / scale, (std::abs(e2(z)) - dz) / scale});
    }
    out.push_back(make_check(6, "|E1|, |E2| <= |D| on the circle", ErrorKind::ModulusDomination, ec, 1e-9, ec <= 1e-9));
  }

  double refl = kInf;
  if (e2.degree() <= n) {
    const double cscale = std::max({1.0, e1.max_abs_coeff(), e2.max_abs_coeff(), d.max_abs_coeff()});
    refl = max_coeff_diff(e1, reflect(e2, n)) / cscale;
  }
  out.push_back(make_check(7, "E1 = E2^{~n}", ErrorKind::ReflectionMismatch, refl, 1e-10, refl < 1e-10));
  return rep;
}

TetraRational TetraRational::validate(Polynomial e1, Polynomial e2, Polynomial d, int n, ValidationMode mode) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  ValidationReport rep = check_conditions(e1, e2, d, n, mode);
  if (!rep.ok()) {
    const auto bad = rep.failures();
    std::string msg = "violated:";
    for (const auto& c : bad) msg += " (" + std::to_string(c.index) + ") " + c.name + ";";
    throw ValidationError(bad.front().kind, msg, std::move(rep));
  }
  return TetraRational(std::move(e1), std::move(e2), std::move(d), n, mode);
}

TetraPoint eval_function(const TetraRational& x, cplx lambda) {
  if (std::abs(lambda) > 1.0 + 1e-9) throw Error(ErrorKind::InvalidArgument, "evaluation point outside the closed disc");
  const cplx dz = x.d()(lambda);
  if (std::abs(dz) < 1e-13) throw Error(ErrorKind::DenominatorVanishes, "D(lambda) = 0");
  return {x.e1()(lambda) / dz, x.e2()(lambda) / dz, reflect(x.d(), x.n())(lambda) / dz};
}

int degree(const TetraRational& x) {
  const Polynomial dr = reflect(x.d(), x.n());
  if (dr.degree() <= 0) return 0;
  int count = 0;
  for (cplx r : raw_roots(dr))
    if (std::abs(r) < 1.0 - 1e-9) ++count;
  return count;
}

int winding_number(const TetraRational& x, int samples) {
  if (samples < 256) throw Error(ErrorKind::InvalidArgument, "winding number needs at least 256 samples");
  const Polynomial dr = reflect(x.d(), x.n());
  const std::vector<cplx> pts = circle_points(samples);
  auto x3 = [&](cplx z) { return dr(z) / x.d()(z); };
  double total = 0.0;
  cplx prev = x3(pts.front());
  for (int k = 1; k <= samples; ++k) {
    const cplx cur = x3(pts[static_cast<std::size_t>(k % samples)]);
    const double step = std::arg(cur / prev);
    if (std::abs(step) >= std::numbers::pi * (1.0 - 1e-12))
      throw Error(ErrorKind::SamplingTooCoarse, "argument jump of " + std::to_string(step));
    total += step;
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

Polynomial royal_polynomial(const TetraRational& x) {
  return reflect(x.d(), x.n()) * x.d() - x.e1() * x.e2();
}

bool is_royal_variety(const TetraRational& x) {
  const double s = std::max(1.0, x.d().max_abs_coeff());
  return royal_polynomial(x).max_abs_coeff() <= 1e-12 * s * s;
}

std::vector<RoyalNode> royal_nodes(const TetraRational& x, double cluster_tol, double circle_tol) {
  if (is_royal_variety(x)) throw Error(ErrorKind::RoyalVarietyFunction, "royal polynomial vanishes identically");
  const Polynomial r = royal_polynomial(x);
  std::vector<RoyalNode> out;
  if (r.degree() <= 0) return out;
  // Cluster before filtering: a circle root splits across the circle.
  const RootMultiset ms = merge_circle_splits(r, roots(r, cluster_tol).entries);
  for (const Root& root : ms.entries) {
    const double m = std::abs(root.location);
    if (m > 1.0 + circle_tol) continue;
    const bool on_circle = std::abs(m - 1.0) < circle_tol;
    if (on_circle && root.order % 2 != 0)
      throw Error(ErrorKind::OddCircleRootOrder, "odd-order royal root on the circle");
    out.push_back({root.location, root.order, on_circle ? root.order / 2 : root.order, on_circle});
  }
  std::sort(out.begin(), out.end(), [](const RoyalNode& a, const RoyalNode& b) {
    if (a.on_circle != b.on_circle) return b.on_circle;
    if (std::abs(a.location) != std::abs(b.location)) return std::abs(a.location) < std::abs(b.location);
    return std::arg(a.location) < std::arg(b.location);
  });
  return out;
}

TypeNK type_nk(const TetraRational& x) {
  TypeNK t;
  if (is_royal_variety(x)) {
    t.royal_variety = true;
    return t;
  }
  for (const RoyalNode& node : royal_nodes(x)) {
    t.n += node.multiplicity;
    if (node.on_circle) t.k += node.multiplicity;
  }
  return t;
}

TetraRational superficial_build(const SuperficialSpec& spec, int n_bound) {
  const double mass = std::abs(spec.beta1) + std::abs(spec.beta2);
  if (std::abs(mass - 1.0) > 1e-12)
    throw Error(ErrorKind::InvalidSuperficialSpec, "|beta1| + |beta2| must equal 1");
  const cplx c = spec.x3.unimodular_constant;
  if (std::abs(std::abs(c) - 1.0) > 1e-12) throw Error(ErrorKind::InvalidSuperficialSpec, "Blaschke constant not unimodular");
  for (cplx a : spec.x3.zeros)
    if (std::abs(a) >= 1.0) throw Error(ErrorKind::InvalidSuperficialSpec, "Blaschke zero outside the open disc");
  const int m = static_cast<int>(spec.x3.zeros.size());
  if (n_bound < m) throw Error(ErrorKind::InvalidSuperficialSpec, "Blaschke degree exceeds the bound");

  Polynomial d = Polynomial::constant(std::conj(std::sqrt(c)));
  for (cplx a : spec.x3.zeros) d = d * Polynomial{1.0, -std::conj(a)};
  for (int j = m; j < n_bound; ++j) d = d * Polynomial{1.0, 1.0};
  const Polynomial nd = reflect(d, n_bound);
  Polynomial e1 = spec.beta1 * d + std::conj(spec.beta2) * nd;
  Polynomial e2 = spec.beta2 * d + std::conj(spec.beta1) * nd;
  const auto mode = n_bound > m ? ValidationMode::Lenient : ValidationMode::Strict;
  return TetraRational::validate(std::move(e1), std::move(e2), std::move(d), n_bound, mode);
}

bool is_superficial(const TetraRational& x, int samples, double tol) {
  if (samples < 64) throw Error(ErrorKind::InvalidArgument, "superficiality check needs at least 64 samples");
  for (double rad : {0.1, 0.5, 0.9}) {
    for (int k = 0; k < samples; ++k) {
      const TetraPoint p = eval_function(x, std::polar(rad, 2.0 * std::numbers::pi * k / samples));
      if (!(std::abs(tetra_defect(p)) < tol)) return false;
    }
  }
  return true;
}

double psi_omega_check(const TetraRational& x, const SuperficialSpec& spec, int samples) {
  if (std::abs(spec.beta1) < 1e-14 || std::abs(spec.beta2) < 1e-14)
    throw Error(ErrorKind::UndefinedOmegaOrK, "both betas must be nonzero");
  const cplx omega = std::conj(spec.beta2) / std::abs(spec.beta2);
  const cplx k = spec.beta1 / std::abs(spec.beta1);
  double worst = 0.0;
  for (double rad : {0.0, 0.3, 0.6, 0.9}) {
    for (int j = 0; j < samples; ++j) {
      const TetraPoint p = eval_function(x, std::polar(rad, 2.0 * std::numbers::pi * j / samples));
      worst = std::max(worst, std::abs(psi(omega, p) - k));
    }
  }
  return worst;
}

TetraRational from_gamma_inner(const Polynomial& s_num, const Polynomial& denom, int n) {
  std::string bad;
  if (n < 0) bad += " negative n;";
  if (denom.is_zero()) {
    bad += " zero denominator;";
  } else {
    if (s_num.degree() > n || denom.degree() > n) bad += " degree exceeds n;";
    if (min_root_modulus(denom) <= 1.0 + 1e-10) bad += " denominator vanishes on the closed disc;";
  }
  if (bad.empty()) {
    const double cs = std::max({1.0, s_num.max_abs_coeff(), denom.max_abs_coeff()});
    if (!is_n_symmetric(s_num, n, 1e-10 * cs)) bad += " numerator not n-symmetric;";
    const std::vector<cplx> pts = circle_points(kCircleSamples);
    const double scale = circle_sup(denom, pts);
    for (cplx z : pts) {
      if (std::abs(s_num(z)) - 2.0 * std::abs(denom(z)) > 1e-9 * scale) {
        bad += " |s| exceeds 2 on the circle;";
        break;
      }
    }
  }
  if (!bad.empty()) throw Error(ErrorKind::GammaInnerPrecondition, bad);
  Polynomial half = 0.5 * s_num;
  return TetraRational::validate(half, half, denom, n);
}

std::vector<TracePoint> circle_trace(const TetraRational& x, int samples) {
  if (samples < 16) throw Error(ErrorKind::InvalidArgument, "trace needs at least 16 samples");
  std::vector<TracePoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const TetraPoint p = eval_function(x, std::polar(1.0, theta));
    out.push_back({theta, p, distinguished_defect(p)});
  }
  return out;
}

}  // namespace tetra
