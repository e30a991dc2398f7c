#include <doctest.h>

#include <algorithm>
#include <random>

#include "spec_gen.hpp"
#include "tetra/construct.hpp"

using namespace tetra;

namespace {

constexpr cplx I{0.0, 1.0};

ErrorKind spec_error(const ConstructionSpec& s) {
  try {
    construct(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

// every wanted point has a recovered entry within tol, orders summing right
bool covers(const RootMultiset& got, const std::vector<cplx>& want, double tol) {
  std::vector<int> left;
  for (const Root& r : got.entries) left.push_back(r.order);
  for (cplx w : want) {
    bool hit = false;
    for (std::size_t i = 0; i < got.entries.size() && !hit; ++i) {
      if (left[i] > 0 && std::abs(got.entries[i].location - w) < tol) {
        --left[i];
        hit = true;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("building blocks") {
  CHECK(max_coeff_diff(build_royal_target({0.0}, 1.75), Polynomial{0.0, 1.75}) < 1e-15);
  // (l - 1)(1 - l) = -1 + 2l - l^2
  CHECK(max_coeff_diff(build_royal_target({1.0}, 1.0), Polynomial{-1.0, 2.0, -1.0}) < 1e-15);
  CHECK(max_coeff_diff(build_royal_target({}, 2.5), Polynomial{2.5}) < 1e-15);
  const Polynomial r = build_royal_target({0.3 + 0.4 * I, -0.5}, 0.7);
  CHECK(is_n_symmetric(r, 4, 1e-14));

  CHECK(max_coeff_diff(build_e1({}, {0.5}, std::sqrt(2.0)), Polynomial{std::sqrt(2.0), -std::sqrt(2.0) / 2}) < 1e-15);
  CHECK(max_coeff_diff(build_e1({0.5}, {}, 1.0), Polynomial{-0.5, 1.0}) < 1e-15);
  const Polynomial e = build_e1({0.2 * I}, {0.1, -0.3 * I}, 2.0 - I);
  CHECK(std::abs(e(0.2 * I)) < 1e-15);
  CHECK(std::abs(e(10.0)) < 1e-13);
  CHECK(std::abs(e(1.0 / (0.3 * I))) < 1e-13);
  CHECK_THROWS_AS(build_e1({}, {}, 0.0), Error);
  CHECK_THROWS_AS(build_royal_target({2.0}, 1.0), Error);
}

TEST_CASE("the worked example") {
  ConstructionSpec s = testgen::worked_spec();
  s.omega = -1.0;
  const TetraRational x = construct(s);
  CHECK(x.n() == 1);
  CHECK(max_coeff_diff(x.e1(), Polynomial{std::sqrt(2.0), -std::sqrt(2.0) / 2}) < 1e-9);
  CHECK(max_coeff_diff(x.e2(), Polynomial{-std::sqrt(2.0) / 2, std::sqrt(2.0)}) < 1e-9);
  CHECK(max_coeff_diff(x.d(), Polynomial{-2.0, 0.5}) < 1e-9);
  const TypeNK t = type_nk(x);
  CHECK((t.n == 1 && t.k == 0));
}

TEST_CASE("degenerate and circle-node constructions") {
  ConstructionSpec s0;
  s0.t = 0.6;
  const TetraRational x0 = construct(s0);
  CHECK(x0.n() == 0);
  const TetraPoint p0 = eval_function(x0, 0.3);
  CHECK(std::abs(p0.x1 - 0.6 / std::sqrt(1.36)) < 1e-12);
  CHECK(std::abs(p0.x3 - 1.0) < 1e-12);

  ConstructionSpec s;
  s.sigma = {1.0, 0.0};
  s.alpha1 = {0.3};
  s.alpha2 = {-0.4 * I};
  const TetraRational x = construct(s);
  const TypeNK t = type_nk(x);
  CHECK((t.n == 2 && t.k == 1));
  CHECK(std::abs(std::abs(eval_function(x, 1.0).x1) - 1.0) < 1e-8);
}

TEST_CASE("invalid construction specs") {
  ConstructionSpec s;
  s.sigma = {1.0};
  s.alpha1 = {1.0};
  CHECK(spec_error(s) == ErrorKind::NodeZeroCollision);
  s.alpha1 = {1.0 + 1e-7};
  CHECK(spec_error(s) == ErrorKind::InvalidConstructionSpec);
  s.alpha1 = {std::polar(1.0, 1e-3)};
  CHECK_NOTHROW(construct(s));

  ConstructionSpec out;
  out.sigma = {1.5};
  out.alpha1 = {0.0};
  CHECK(spec_error(out) == ErrorKind::NodeOutsideClosedDisc);

  ConstructionSpec count;
  count.sigma = {0.0, 0.1};
  count.alpha1 = {0.0};
  CHECK(spec_error(count) == ErrorKind::InvalidConstructionSpec);

  ConstructionSpec bad = testgen::worked_spec();
  bad.t_plus = 0.0;
  CHECK(spec_error(bad) == ErrorKind::InvalidConstructionSpec);
  bad = testgen::worked_spec();
  bad.t = 0.0;
  CHECK(spec_error(bad) == ErrorKind::InvalidConstructionSpec);
  bad = testgen::worked_spec();
  bad.omega = 1.1;
  CHECK(spec_error(bad) == ErrorKind::InvalidConstructionSpec);
}

TEST_CASE("construct then recover") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int circle = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const ConstructionSpec s = testgen::random_spec(rng, n, circle);
    const TetraRational x = construct(s);
    CHECK(x.n() == n);
    CHECK(max_coeff_diff(royal_polynomial(x), build_royal_target(s.sigma, s.t_plus)) <
          1e-8 * std::max(1.0, build_royal_target(s.sigma, s.t_plus).max_abs_coeff()));

    const RecoveredData got = recover_data(x);
    REQUIRE(got.zeros1.has_value());
    REQUIRE(got.zeros2.has_value());
    CHECK(covers(*got.zeros1, s.alpha1, 1e-6));
    CHECK(covers(*got.zeros2, s.alpha2, 1e-6));
    CHECK(got.zeros1->total_order() == static_cast<int>(s.alpha1.size()));
    CHECK(got.zeros2->total_order() == static_cast<int>(s.alpha2.size()));

    RootMultiset nodes;
    for (const auto& nd : got.nodes) nodes.entries.push_back({nd.location, nd.multiplicity});
    CHECK(nodes.total_order() == n);
    CHECK(covers(nodes, s.sigma, 1e-6));
    CHECK(type_nk(x).k == circle);
  }
}

TEST_CASE("omega family and scale invariance") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    ConstructionSpec s = testgen::random_spec(rng, n, static_cast<int>(rng() % 2));
    s.omega = 1.0;
    const TetraRational base = construct(s);
    const cplx w = std::polar(1.0, 0.7 + trial);
    ConstructionSpec sw = s;
    sw.omega = w;
    const TetraRational tw = construct(sw);
    ConstructionSpec sc = s;
    sc.t_plus *= 9.0;
    sc.t *= 3.0;
    const TetraRational scaled = construct(sc);
    for (int k = 0; k < 16; ++k) {
      const cplx l = oracle::in_disc(rng, 0.98);
      const TetraPoint a = eval_function(base, l), b = eval_function(tw, l), c = eval_function(scaled, l);
      CHECK(std::abs(b.x1 - w * a.x1) < 1e-9);
      CHECK(std::abs(b.x2 - w * a.x2) < 1e-9);
      CHECK(std::abs(b.x3 - w * w * a.x3) < 1e-9);
      CHECK(std::abs(c.x1 - a.x1) < 1e-9);
      CHECK(std::abs(c.x3 - a.x3) < 1e-9);
    }
  }
}
