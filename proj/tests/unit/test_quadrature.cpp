// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include <cmath>

#include "doctest.h"
#include "dblgamma/barnes.hpp"
#include "dblgamma/gamma.hpp"
#include "dblgamma/quadrature.hpp"
#include "oracles.hpp"

using namespace dblgamma;

namespace {
const double kPi = 3.141592653589793;
}  // namespace

TEST_CASE("closed-form integrals") {
  const QuadratureResult a = integrate(NamedIntegrand::parse("power_log(0)"), 0.0, 1.0, 1e-12);
  CHECK(a.converged);
  CHECK(std::fabs(a.value + 1.0) < 1e-12);

  const QuadratureResult b = integrate(NamedIntegrand::parse("log_sin"), 0.0, kPi, 1e-9);
  CHECK(std::fabs(b.value + kPi * std::log(2.0)) < 1e-9);

  const QuadratureResult c = integrate(NamedIntegrand::parse("cot_x"), 0.0, 0.5, 1e-10);
  CHECK(std::fabs(c.value - 0.5 * std::log(2.0)) < 1e-10);
}

TEST_CASE("power_log closed form") {
  CHECK(power_log_closed(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(power_log_closed(1, 1) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(std::fabs(power_log_closed(2, 0.5) - (3 * std::log(0.5) - 1) / 72) < 1e-16);
  for (const double p : {-0.5, 0.0, 0.5, 1.0, 3.0}) {
    for (const double u : {0.25, 1.0, 2.0}) {
      const QuadratureResult q = integrate(NamedIntegrand::make(IntegrandKind::power_log, p), 0.0, u, 1e-12);
      CHECK_MESSAGE(std::fabs(q.value - power_log_closed(p, u)) < 1e-10, "p = " << p << " u = " << u);
    }
  }
}

TEST_CASE("raabe numeric") {
  CHECK(std::fabs(raabe_numeric(0.0, 1e-10).value - 0.5 * std::log(2 * kPi)) < 1e-8);
  CHECK(std::fabs(raabe_numeric(1.0, 1e-11).value - (0.5 * std::log(2 * kPi) - 1)) < 1e-9);
  CHECK(std::fabs(raabe_numeric(2.0, 1e-11).value - raabe_closed(2.0)) < 1e-9);
}

TEST_CASE("additivity") {
  auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
  const QuadratureResult whole = integrate(f, 0.0, 2.0, 1e-12);
  for (const double c : {0.3, 1.0, 1.7}) {
    const QuadratureResult l = integrate(f, 0.0, c, 1e-12), r = integrate(f, c, 2.0, 1e-12);
    CHECK(std::fabs(l.value + r.value - whole.value) <= l.err_estimate + r.err_estimate + whole.err_estimate + 1e-15);
  }
  const NamedIntegrand ls = NamedIntegrand::parse("log_sin");
  const QuadratureResult w = integrate(ls, 0.0, kPi, 1e-10);
  const QuadratureResult l = integrate(ls, 0.0, 1.0, 1e-10), r = integrate(ls, 1.0, kPi, 1e-10);
  CHECK(std::fabs(l.value + r.value - w.value) <= l.err_estimate + r.err_estimate + w.err_estimate + 1e-14);
}

TEST_CASE("polynomial exactness") {
  for (int deg = 0; deg <= 20; ++deg) {
    const QuadratureResult q = integrate([deg](double x) { return std::pow(x, deg); }, 0.0, 1.0, 1e-3);
    CHECK_MESSAGE(std::fabs(q.value - 1.0 / (deg + 1)) < 4e-16, "degree " << deg);
    CHECK(q.subdivisions <= 1);
  }
}

TEST_CASE("error honesty on integrands with closed forms") {
  struct Case {
    NamedIntegrand f;
    double a, b, closed;
  };
  const double log2 = std::log(2.0);
  const Case cases[] = {
      {NamedIntegrand::parse("power_log(0)"), 0.0, 1.0, -1.0},
      {NamedIntegrand::parse("power_log(1)"), 0.0, 1.0, -0.25},
      {NamedIntegrand::parse("log_sin"), 0.0, kPi, -kPi * log2},
      {NamedIntegrand::parse("cot_x"), 0.0, 0.5, 0.5 * log2},
      {NamedIntegrand::parse("csc_x"), 0.0, 0.5, 2 * static_cast<double>(oracle::kCatalan) / kPi},
      {NamedIntegrand::parse("log_gamma_t"), 0.0, 1.0, 0.5 * std::log(2 * kPi)},
      {NamedIntegrand::parse("log_gamma_1p"), 0.0, 1.0, 0.5 * std::log(2 * kPi) - 1},
  };
  for (const double tol : {1e-6, 1e-9, 1e-12}) {
    for (const auto& c : cases) {
      const QuadratureResult q = integrate(c.f, c.a, c.b, tol);
      CHECK_MESSAGE(std::fabs(q.value - c.closed) <= 10 * q.err_estimate + 1e-15,
                    c.f.name() << " tol " << tol);
    }
  }
}

TEST_CASE("alexeiewsky path through x psi(1+x)") {
  for (const double u : {0.25, 0.5, 1.0, 1.5}) {
    const double by_parts = integrate(NamedIntegrand::parse("x_psi"), 0.0, u, 1e-12).value;
    const double expect = u * log_gamma(1 + u).value - integrate(NamedIntegrand::parse("log_gamma_1p"), 0.0, u, 1e-12).value;
    CHECK_MESSAGE(std::fabs(by_parts - expect) < 1e-8, "u = " << u);
  }
}

TEST_CASE("named integrands and removable limits") {
  CHECK(NamedIntegrand::parse("cot_x")(0.0) == 1.0);
  CHECK(NamedIntegrand::parse("csc_x")(0.0) == 1.0);
  CHECK(NamedIntegrand::parse("power_log(1)")(0.0) == 0.0);
  CHECK(NamedIntegrand::parse("x_psi")(0.0) == 0.0);
  CHECK(NamedIntegrand::parse("power_log(1.5)").param() == 1.5);
  CHECK(NamedIntegrand::parse("zeta_prime(2)").kind() == IntegrandKind::zeta_prime);
  CHECK(NamedIntegrand::parse("zeta_prime(2)").name() == "zeta_prime(2)");
  const double zp = NamedIntegrand::parse("zeta_prime(2)")(0.5);
  CHECK(std::fabs(zp - static_cast<double>(oracle::hurwitz(-1, 0.5L).d)) < 1e-11);
  const double zdd = NamedIntegrand::parse("zeta_dd(1)")(0.5);
  CHECK(std::fabs(zdd - static_cast<double>(oracle::hurwitz(0, 0.5L).dd)) < 1e-10);

  CHECK_THROWS_AS(NamedIntegrand::parse("nope"), InvalidArgument);
  CHECK_THROWS_AS(NamedIntegrand::parse("power_log(x)"), InvalidArgument);
  CHECK_THROWS_AS(NamedIntegrand::parse("power_log(-1)"), InvalidArgument);
  CHECK_THROWS_AS(NamedIntegrand::parse("zeta_prime(1.5)"), InvalidArgument);
  CHECK_THROWS_AS(NamedIntegrand::parse("zeta_prime(0)"), InvalidArgument);
  CHECK_THROWS_AS(NamedIntegrand::parse("cot_x(2)"), InvalidArgument);
}

TEST_CASE("range and argument errors") {
  auto one = [](double) { return 1.0; };
  CHECK_THROWS_AS(integrate(one, 1.0, 0.0, 1e-8), InvalidArgument);
  CHECK_THROWS_AS(integrate(one, 0.0, INFINITY, 1e-8), InvalidArgument);
  CHECK_THROWS_AS(integrate(one, 0.0, 1.0, 0.0), InvalidArgument);
  CHECK(integrate(one, 0.5, 0.5, 1e-8).value == 0.0);
  CHECK_THROWS_AS(integrate(NamedIntegrand::parse("log_sin"), 0.0, 4.0, 1e-8), DomainError);
  CHECK_THROWS_AS(integrate(NamedIntegrand::parse("log_gamma_t"), -1.0, 1.0, 1e-8), DomainError);
}

TEST_CASE("non-finite interior value raises an integrand error with its location") {
  try {
    integrate([](double x) { return x > 0.3 && x < 0.4 ? NAN : x; }, 0.0, 1.0, 1e-10);
    FAIL("expected IntegrandError");
  } catch (const IntegrandError& e) {
    CHECK(e.location() > 0.3);
    CHECK(e.location() < 0.4);
    CHECK(e.kind() == ErrorKind::non_finite);
  }
}

TEST_CASE("subdivision limit reports non-convergence") {
  // Oscillation far beyond what 4000 panels can resolve to 1e-14.
  const QuadratureResult q = integrate([](double x) { return std::sin(1e6 * x); }, 0.0, 10.0, 1e-14);
  CHECK_FALSE(q.converged);
  CHECK(q.subdivisions <= static_cast<std::uint64_t>(kQuadMaxSubdivisions));
}

TEST_CASE("endpoint log singularity") {
  // int_0^1 log(x)^2 dx = 2.
  const QuadratureResult q = integrate([](double x) { return std::log(x) * std::log(x); }, 0.0, 1.0, 1e-11);
  CHECK(std::fabs(q.value - 2.0) < 1e-10);
  CHECK(std::fabs(q.value - 2.0) <= 10 * q.err_estimate);
}
