#include "tetra/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "tetra/errors.hpp"

namespace tetra {

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(cplx c) { return Polynomial(std::vector<cplx>{c}); }

Polynomial Polynomial::monomial(int power, cplx c) {
  if (power < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial power");
  std::vector<cplx> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> v{lead};
  for (cplx r : roots) {
    std::vector<cplx> next(v.size() + 1);
    for (std::size_t j = 0; j < v.size(); ++j) {
      next[j + 1] += v[j];
      next[j] -= r * v[j];
    }
    v = std::move(next);
  }
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < kTrimTol) coeffs_.pop_back();
}

cplx Polynomial::operator()(cplx lambda) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lambda + *it;
  return acc;
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cplx scalar) {
  for (cplx& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial reflect(const Polynomial& p, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative reflection index");
  if (p.degree() > n)
    throw Error(ErrorKind::DegreeExceedsReflectionIndex,
                "degree " + std::to_string(p.degree()) + " > n = " + std::to_string(n));
  if (p.is_zero()) return {};
  std::vector<cplx> v(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = std::conj(p[static_cast<std::size_t>(n - j)]);
  return Polynomial(std::move(v));
}

Polynomial conj_flip(const Polynomial& p) {
  std::vector<cplx> v = p.coeffs();
  for (cplx& c : v) c = std::conj(c);
  return Polynomial(std::move(v));
}

double max_coeff_diff(const Polynomial& a, const Polynomial& b) {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  double m = 0.0;
  for (std::size_t j = 0; j < len; ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

bool is_n_symmetric(const Polynomial& p, int n, double tol) {
  if (p.degree() > n) return false;
  return max_coeff_diff(p, reflect(p, n)) < tol;
}

int RootMultiset::total_order() const noexcept {
  return std::accumulate(entries.begin(), entries.end(), 0,
                         [](int acc, const Root& r) { return acc + r.order; });
}

Polynomial RootMultiset::expand() const {
  std::vector<cplx> flat;
  for (const Root& r : entries) flat.insert(flat.end(), static_cast<std::size_t>(r.order), r.location);
  return Polynomial::from_roots(flat);
}

namespace {

// Parlett-Reinsch balancing; improves eigenvalue accuracy when the
// coefficients span many orders of magnitude.
void balance(Eigen::MatrixXcd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

cplx derivative_at(const std::vector<cplx>& c, cplx z) {
  cplx acc{};
  for (std::size_t j = c.size() - 1; j >= 1; --j) acc = acc * z + static_cast<double>(j) * c[j];
  return acc;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

std::vector<cplx> raw_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomialHasAllRoots, "roots of the zero polynomial");
  const auto& all = p.coeffs();
  std::size_t low = 0;
  while (all[low] == cplx{}) ++low;
  std::vector<cplx> out(low, cplx{});
  std::vector<cplx> c(all.begin() + static_cast<std::ptrdiff_t>(low), all.end());
  const Eigen::Index m = static_cast<Eigen::Index>(c.size()) - 1;
  if (m <= 0) return out;
  if (m == 1) {
    out.push_back(-c[0] / c[1]);
    return out;
  }

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) companion(i, m - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  balance(companion);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  const Eigen::VectorXcd& ev = solver.eigenvalues();

  for (Eigen::Index i = 0; i < m; ++i) {
    cplx z = ev(i);
    double res = std::abs(horner(c, z));
    // Newton polish; keep a step only when it reduces the residual.
    for (int it = 0; it < 3 && res > 0.0; ++it) {
      const cplx d = derivative_at(c, z);
      if (d == cplx{}) break;
      const cplx cand = z - horner(c, z) / d;
      const double cand_res = std::abs(horner(c, cand));
      if (!(cand_res < res)) break;
      z = cand;
      res = cand_res;
    }
    out.push_back(z);
  }
  return out;
}

RootMultiset cluster_points(std::span<const cplx> points, double tol) {
  const std::size_t n = points.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(points[i] - points[j]) < tol) parent[find(i)] = find(j);

  RootMultiset out;
  out.cluster_tol = tol;
  std::vector<std::ptrdiff_t> slot(n, -1);
  std::vector<cplx> sums;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(out.entries.size());
      out.entries.push_back({cplx{}, 0});
      sums.push_back(cplx{});
    }
    const auto k = static_cast<std::size_t>(slot[r]);
    sums[k] += points[i];
    out.entries[k].order += 1;
  }
  for (std::size_t k = 0; k < out.entries.size(); ++k)
    out.entries[k].location = sums[k] / static_cast<double>(out.entries[k].order);
  return out;
}

cplx polish_multiple_root(const Polynomial& p, cplx z, int order, double max_move) {
  std::vector<cplx> q = p.coeffs();
  for (int k = 1; k < order && !q.empty(); ++k) {
    for (std::size_t j = 1; j < q.size(); ++j) q[j - 1] = static_cast<double>(j) * q[j];
    q.pop_back();
  }
  if (q.size() < 2) return z;
  const cplx start = z;
  double res = std::abs(horner(q, z));
  for (int it = 0; it < 8 && res > 0.0; ++it) {
    const cplx d = derivative_at(q, z);
    if (d == cplx{}) break;
    const cplx cand = z - horner(q, z) / d;
    const double cand_res = std::abs(horner(q, cand));
    if (!(cand_res < res) || std::abs(cand - start) > max_move) break;
    z = cand;
    res = cand_res;
  }
  return z;
}

RootMultiset roots(const Polynomial& p, double cluster_tol) {
  const std::vector<cplx> all = raw_roots(p);
  RootMultiset out = cluster_points(all, cluster_tol);
  for (Root& r : out.entries)
    if (r.order > 1) r.location = polish_multiple_root(p, r.location, r.order, cluster_tol);
  return out;
}

}  // namespace tetra
