#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tetra/errors.hpp"
#include "tetra/fejer_riesz.hpp"

using namespace tetra;

namespace {

// Aligns the phase of `got` to `want` through the largest coefficient of want.
double aligned_diff(const Polynomial& got, const Polynomial& want) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < want.coeffs().size(); ++i)
    if (std::abs(want[i]) > std::abs(want[j])) j = i;
  const cplx ph = want[j] / got[j];
  return max_coeff_diff((ph / std::abs(ph)) * got, want);
}

}  // namespace

TEST_CASE("modulus squared") {
  const TrigPolynomial one = modulus_squared_on_circle(Polynomial{1.0});
  CHECK(one.order() == 0);
  CHECK(one[0] == cplx(1.0));

  const TrigPolynomial sq = modulus_squared_on_circle(Polynomial{1.0, 1.0});
  CHECK(sq[0] == cplx(2.0));
  CHECK(sq[1] == cplx(1.0));

  const TrigPolynomial ex = modulus_squared_on_circle(Polynomial{-2.0, 0.5});
  CHECK(std::abs(ex[0] - 17.0 / 4) < 1e-15);
  CHECK(std::abs(ex[1] - cplx(-1.0)) < 1e-15);

  std::mt19937_64 rng(20);
  for (int i = 0; i < 20; ++i) {
    std::vector<cplx> c(6);
    for (auto& v : c) v = oracle::in_disc(rng, 2.0);
    const TrigPolynomial t = modulus_squared_on_circle(Polynomial(c));
    for (double th : {0.0, 0.4, 2.0, 5.5}) CHECK(std::abs(t.at_angle(th) - std::norm(oracle::power_sum(c, std::polar(1.0, th)))) < 1e-11);
  }
}

TEST_CASE("laurent shift") {
  const TrigPolynomial a = laurent_shift(Polynomial{0.0, 1.75}, 1);
  CHECK(a.order() == 0);
  CHECK(std::abs(a[0] - 1.75) < 1e-15);

  const TrigPolynomial q = laurent_shift(Polynomial{-1.0, 2.0, -1.0}, 1);
  CHECK(std::abs(q[0] - 2.0) < 1e-15);
  CHECK(std::abs(q[1] - cplx(-1.0)) < 1e-15);

  CHECK(laurent_shift(Polynomial{}, 2).is_zero());
  try {
    laurent_shift(Polynomial{1.0, 0.0, 3.0}, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTwoNSymmetric);
  }
}

TEST_CASE("factor: closed forms") {
  CHECK(max_coeff_diff(factor(TrigPolynomial({1.0})), Polynomial{1.0}) < 1e-12);
  CHECK(max_coeff_diff(factor(TrigPolynomial({2.0, 1.0})), Polynomial{1.0, 1.0}) < 1e-7);
  const Polynomial d = factor(TrigPolynomial({17.0 / 4, -1.0}));
  CHECK(max_coeff_diff(d, Polynomial{2.0, -0.5}) < 1e-12);
  CHECK(is_outer(d));
}

TEST_CASE("factor: rejections") {
  try {
    factor(TrigPolynomial({0.5, 1.0}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNonnegativeOnCircle);
  }
  CHECK_THROWS_AS(factor(TrigPolynomial{}), Error);
}

TEST_CASE("factor: random outer round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t deg = rng() % 9;
    std::vector<cplx> rts;
    for (std::size_t j = 0; j < deg; ++j) rts.push_back(oracle::in_annulus(rng, 1.05, 3.0));
    std::vector<cplx> c = oracle::expand(rts, oracle::in_disc(rng, 1.0) + 0.5);
    double big = 0.0;
    for (cplx v : c) big = std::max(big, std::abs(v));
    for (cplx& v : c) v /= big;
    const Polynomial want(c);
    const TrigPolynomial p = modulus_squared_on_circle(want);
    const Polynomial got = factor(p);
    CHECK(got.degree() == want.degree());
    CHECK(aligned_diff(got, want) < 1e-8);
    CHECK(is_outer(got, 1e-9));
    double err = 0.0, top = 0.0;
    for (int k = 0; k < kCircleSamples; ++k) {
      const double th = 2.0 * std::numbers::pi * k / kCircleSamples;
      err = std::max(err, std::abs(std::norm(got(std::polar(1.0, th))) - p.at_angle(th)));
      top = std::max(top, std::abs(p.at_angle(th)));
    }
    CHECK(err < 1e-8 * (1.0 + top));
  }
}

TEST_CASE("factor: double root on the circle") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t deg = 1 + rng() % 5;
    std::vector<cplx> rts;
    for (std::size_t j = 0; j < deg; ++j) rts.push_back(oracle::in_annulus(rng, 1.2, 3.0));
    const Polynomial d0(oracle::expand(rts));
    const Polynomial target = d0 * Polynomial{1.0, -1.0};
    const Polynomial got = factor(modulus_squared_on_circle(target));
    CHECK(got.degree() == static_cast<int>(deg) + 1);
    double nearest = 10.0;
    for (cplx r : raw_roots(got)) nearest = std::min(nearest, std::abs(r - 1.0));
    CHECK(nearest < 1e-6);
  }
}

TEST_CASE("outer test") {
  CHECK(is_outer(Polynomial{1.0, 1.0}));
  CHECK_FALSE(is_outer(Polynomial{0.0, 1.0}));
  CHECK(is_outer(Polynomial{-2.0, 0.5}));
}
