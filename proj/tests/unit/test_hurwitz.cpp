// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include <cmath>

#include "doctest.h"
#include "dblgamma/barnes.hpp"
#include "dblgamma/bernoulli.hpp"
#include "dblgamma/gamma.hpp"
#include "dblgamma/hurwitz.hpp"
#include "dblgamma/quadrature.hpp"
#include "oracles.hpp"

using namespace dblgamma;

namespace {
const double kPi = 3.141592653589793;
const double kLog2Pi = std::log(2 * kPi);
const double kZetaPrimeM1 = static_cast<double>(1.0L / 12 - oracle::kLogGlaisher);
}  // namespace

TEST_CASE("hurwitz zeta anchors") {
  CHECK(std::fabs(hurwitz_zeta(0.0, 0.3).value - 0.2) < 1e-12);
  CHECK(std::fabs(hurwitz_zeta(-1.0, 1.0).value + 1.0 / 12) < 1e-12);
  CHECK(std::fabs(hurwitz_zeta(2.0, 1.0).value - kPi * kPi / 6) < 1e-11);
  CHECK(std::fabs(hurwitz_zeta(2.0, 1.0).value - 1.6449340668) < 1e-10);
}

TEST_CASE("hurwitz zeta against the Euler-Maclaurin oracle") {
  for (const double s : {-3.5, -2.0, -1.0, -0.5, 0.0, 0.5, 0.9, 1.1, 2.0, 3.0, 4.5}) {
    for (const double x : {0.1, 0.25, 0.5, 1.0, 1.7, 3.0}) {
      const SeriesValue v = hurwitz_zeta(s, x);
      const double ref = static_cast<double>(oracle::hurwitz(s, x).v);
      CHECK_MESSAGE(std::fabs(v.value - ref) < 1e-10 * std::fmax(1.0, std::fabs(ref)),
                    "s = " << s << " x = " << x);
    }
  }
}

TEST_CASE("direct summation agrees for s > 1") {
  for (const double s : {1.5, 2.0, 3.0, 6.0}) {
    for (const double x : {0.3, 1.0, 2.5}) {
      const double ref = static_cast<double>(oracle::hurwitz(s, x).v);
      CHECK(std::fabs(hurwitz_zeta_direct(s, x).value - ref) < 1e-10 * std::fmax(1.0, ref));
    }
  }
  CHECK_THROWS_AS(hurwitz_zeta_direct(0.5, 1.0), DomainError);
}

TEST_CASE("pole and domain errors") {
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(1.0 + 1e-7, 1.0), PoleError);
  CHECK_NOTHROW(hurwitz_zeta(1.0 + 1e-3, 1.0));
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta_sderiv(1, 1.0, 1.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta_sderiv(3, 0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(hurwitz_zeta_sderiv(1, 0.0, 0.0), DomainError);
}

TEST_CASE("s-derivative anchors") {
  CHECK(std::fabs(hurwitz_zeta_sderiv(1, 0.0, 1.0).value + 0.5 * kLog2Pi) < 1e-11);
  CHECK(std::fabs(hurwitz_zeta_sderiv(1, 0.0, 1.0).value - (-0.9189385332)) < 1e-10);
  CHECK(std::fabs(hurwitz_zeta_sderiv(1, 0.0, 0.5).value + 0.5 * std::log(2.0)) < 1e-11);
  CHECK(std::fabs(hurwitz_zeta_sderiv(1, -1.0, 1.0).value - (-0.1654211437)) < 1e-10);
  const ZetaDD0Limit lim = zeta_dd0_limit(100000);
  CHECK(std::fabs(hurwitz_zeta_sderiv(2, 0.0, 1.0).value - lim.telescoped) < 1e-4);
}

TEST_CASE("s-derivatives against the oracle") {
  for (const double s : {-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0}) {
    for (const double x : {0.2, 0.5, 1.0, 2.0}) {
      const oracle::Jet ref = oracle::hurwitz(s, x);
      const double d1 = static_cast<double>(ref.d), d2 = static_cast<double>(ref.dd);
      CHECK_MESSAGE(std::fabs(hurwitz_zeta_sderiv(1, s, x).value - d1) < 1e-9 * std::fmax(1.0, std::fabs(d1)),
                    "s = " << s << " x = " << x);
      CHECK_MESSAGE(std::fabs(hurwitz_zeta_sderiv(2, s, x).value - d2) < 1e-8 * std::fmax(1.0, std::fabs(d2)),
                    "s = " << s << " x = " << x);
    }
  }
}

TEST_CASE("error estimates bound the oracle difference") {
  for (const double s : {-2.0, 0.0, 0.5, 2.0}) {
    for (const double x : {0.3, 1.0, 2.0}) {
      const SeriesValue v = hurwitz_zeta(s, x);
      const double ref = static_cast<double>(oracle::hurwitz(s, x).v);
      CHECK(std::fabs(v.value - ref) <= v.err_estimate + 1e-14 * std::fmax(1.0, std::fabs(ref)));
    }
  }
}

TEST_CASE("zeta derivative constants") {
  for (int m = 0; m <= 6; ++m) {
    for (int j = 0; j <= 2; ++j) {
      const oracle::Jet ref = oracle::hurwitz(-m, 1);
      const double r = static_cast<double>(j == 0 ? ref.v : j == 1 ? ref.d : ref.dd);
      CHECK_MESSAGE(std::fabs(zeta_deriv_constant(j, m) - r) < 1e-10, "j = " << j << " m = " << m);
    }
  }
  CHECK(std::fabs(zeta_deriv_constant(1, 1) - kZetaPrimeM1) < 1e-12);
  CHECK(std::fabs(zeta_deriv_constant(2, 0) - static_cast<double>(oracle::kZetaDD0)) < 1e-10);
  CHECK(zeta_deriv_constant(1, 3) == zeta_deriv_constant(1, 3));
  CHECK_THROWS(zeta_deriv_constant(3, 0));
  CHECK_THROWS(zeta_deriv_constant(1, 17));
}

TEST_CASE("shift relation") {
  for (const double s : {-2.0, -1.0, 0.0, 2.0, 3.0}) {
    for (const double x : {0.25, 0.5, 1.0, 2.0}) {
      const double r = hurwitz_zeta(s, x).value - hurwitz_zeta(s, 1 + x).value - std::pow(x, -s);
      CHECK_MESSAGE(std::fabs(r) < 1e-9, "s = " << s << " x = " << x);
    }
  }
}

TEST_CASE("derivative shift") {
  for (int n = 1; n <= 4; ++n) {
    for (const double x : {0.25, 0.5, 1.0, 1.5, 2.0}) {
      const double r = hurwitz_zeta_sderiv(1, 1 - n, 1 + x).value - hurwitz_zeta_sderiv(1, 1 - n, x).value -
                       std::pow(x, n - 1) * std::log(x);
      CHECK_MESSAGE(std::fabs(r) < 1e-8, "n = " << n << " x = " << x);
    }
    CHECK(std::fabs(hurwitz_zeta_sderiv(1, 1 - n, 2.0).value - zeta_deriv_constant(1, n - 1)) < 1e-9);
  }
}

TEST_CASE("Hasse series against Bernoulli polynomials") {
  for (int m = 1; m <= 8; ++m) {
    const double tol = m <= 6 ? 1e-8 : 1e-6;
    for (double x = 0.25; x <= 2.0 + 1e-12; x += 0.25) {
      CHECK_MESSAGE(std::fabs(hurwitz_zeta(1 - m, x).value - zeta_neg_int(m, x)) < tol,
                    "m = " << m << " x = " << x);
    }
  }
  CHECK(std::fabs(zeta_neg_int(1, 0.3) - 0.2) < 1e-15);
  CHECK(std::fabs(zeta_neg_int(2, 1.0) + 1.0 / 12) < 1e-15);
  CHECK(std::fabs(zeta_neg_int(3, 1.0)) < 1e-15);
}

TEST_CASE("lerch") {
  CHECK(std::fabs(lerch_zeta_prime0(1.0) + 0.5 * kLog2Pi) < 1e-12);
  CHECK(std::fabs(lerch_zeta_prime0(0.5) + 0.5 * std::log(2.0)) < 1e-12);
  CHECK(std::fabs(lerch_zeta_prime0(2.0) + 0.5 * kLog2Pi) < 1e-12);
  for (double x = 0.1; x <= 3.0 + 1e-12; x += 0.1) {
    CHECK_MESSAGE(std::fabs(hurwitz_zeta_sderiv(1, 0.0, x).value - lerch_zeta_prime0(x)) < 1e-8, "x = " << x);
  }
}

TEST_CASE("gosper vardi") {
  CHECK(std::fabs(gosper_vardi_lhs(1.0)) < 1e-12);
  CHECK(std::fabs(gosper_vardi_rhs(1.0)) < 1e-12);
  const double half = std::log(2.0) / 24 - std::log(kPi) / 4 + 1.5 * kZetaPrimeM1;
  // x = 1/2: log G(3/2) - (1/2) log Gamma(1/2) = log G(1/2) + (1/4) log pi.
  CHECK(std::fabs(gosper_vardi_rhs(0.5) - std::log(kPi) / 4 - half) < 1e-10);
  const double quarter = static_cast<double>(oracle::log_barnes_g1p(0.25L)) -
                         0.25 * static_cast<double>(std::lgamma(0.25L));
  CHECK(std::fabs(gosper_vardi_rhs(0.25) - quarter) < 1e-8);
  for (double x = 0.1; x <= 2.0 + 1e-12; x += 0.1) {
    CHECK_MESSAGE(std::fabs(gosper_vardi_lhs(x) - gosper_vardi_rhs(x)) < 1e-8, "x = " << x);
  }
}

TEST_CASE("adamchik right sides") {
  for (int n = 1; n <= 4; ++n) CHECK(std::fabs(adamchik_rhs(n, 1.0)) < 1e-10);
  CHECK(std::fabs(adamchik_rhs(1, 2.0) + 1.0) < 1e-10);
  const NamedIntegrand zp = NamedIntegrand::make(IntegrandKind::zeta_prime, 2);
  const QuadratureResult q = integrate(zp, 0.0, 0.5, 1e-11);
  CHECK(std::fabs(adamchik_rhs(2, 0.5) - 2 * q.value) < 1e-7);
  // n = 0 form against the Barnes oracle.
  const double x = 0.7;
  const double ref = (x - x * x) / 2 + x * static_cast<double>(std::lgamma(static_cast<long double>(x))) -
                     static_cast<double>(oracle::log_barnes_g1p(x));
  CHECK(std::fabs(adamchik_rhs(0, x) - ref) < 1e-11);
}

TEST_CASE("second-derivative adamchik right sides") {
  for (int n = 1; n <= 3; ++n) CHECK(std::fabs(adamchik_dd_rhs(n, 1.0)) < 1e-10);
  const NamedIntegrand zdd = NamedIntegrand::make(IntegrandKind::zeta_dd, 1);
  const QuadratureResult q = integrate(zdd, 1.0, 2.0, 1e-10);
  CHECK(std::fabs(adamchik_dd_rhs(1, 2.0) - q.value) < 1e-6);
  for (int n = 1; n <= 3; ++n) {
    const QuadratureResult unit =
        integrate(NamedIntegrand::make(IntegrandKind::zeta_dd, n), 0.0, 1.0, 1e-9);
    CHECK_MESSAGE(std::fabs(unit.value) < 1e-6, "n = " << n);
  }
}

TEST_CASE("zeta''(0, u) integral right side") {
  CHECK(std::fabs(zeta_dd0_integral_rhs(1.0) - 0.0) < 1e-9);
  const QuadratureResult q = integrate(NamedIntegrand::make(IntegrandKind::zeta_dd, 1), 0.0, 0.75, 1e-10);
  CHECK(std::fabs(zeta_dd0_integral_rhs(0.75) - q.value) < 1e-6);
}

TEST_CASE("zeta''(0) limits") {
  const ZetaDD0Limit a = zeta_dd0_limit(1000);
  CHECK(a.N == 1000);
  CHECK(std::fabs(a.difference - (a.telescoped - a.classical)) < 1e-12);
  const ZetaDD0Limit b = zeta_dd0_limit(100000);
  CHECK(std::fabs(b.telescoped - static_cast<double>(oracle::kZetaDD0)) <
        std::fabs(a.telescoped - static_cast<double>(oracle::kZetaDD0)));
  CHECK(std::fabs(b.classical - static_cast<double>(oracle::kZetaDD0)) < 1e-3);
}

TEST_CASE("half relation") {
  auto [l0, r0] = zeta_half_relation(0.0);
  CHECK(std::fabs(l0) < 1e-12);
  CHECK(std::fabs(r0) < 1e-12);
  auto [l1, r1] = zeta_half_relation(0.0, true);
  CHECK(std::fabs(l1 + 0.5 * std::log(2.0)) < 1e-11);
  CHECK(std::fabs(r1 + 0.5 * std::log(2.0)) < 1e-11);
  auto [l2, r2] = zeta_half_relation(2.0);
  CHECK(std::fabs(l2 - 3 * kPi * kPi / 6) < 1e-9);
  CHECK(std::fabs(l2 - r2) < 1e-9);
  for (const double s : {-2.5, -1.0, 0.5, 3.0}) {
    for (const bool d : {false, true}) {
      auto [l, r] = zeta_half_relation(s, d);
      CHECK_MESSAGE(std::fabs(l - r) < 1e-8, "s = " << s << " d = " << d);
    }
  }
}

TEST_CASE("Hasse log gamma") {
  CHECK(std::fabs(log_gamma_hasse(1.0).value) < 1e-10);
  CHECK(std::fabs(log_gamma_hasse(0.5).value - 0.5 * std::log(kPi)) < 1e-10);
  const SeriesValue a = log_gamma_hasse(1.5), b = log_gamma(1.5);
  CHECK(std::fabs(a.value - b.value) <= a.err_estimate + b.err_estimate + 1e-14);
  for (double x = 0.1; x <= 3.0; x += 0.1) {
    CHECK_MESSAGE(std::fabs(log_gamma_hasse(x).value - std::lgamma(x)) < 1e-9, "x = " << x);
  }
}

TEST_CASE("Hasse log barnes") {
  CHECK(std::fabs(log_barnes_hasse(1.0).value) < 1e-10);
  CHECK(std::fabs(log_barnes_hasse(0.0).value) < 1e-10);
  CHECK(std::fabs(log_barnes_hasse(0.5).value - log_barnes_g1p(0.5).value) < 1e-8);
  for (double x = 0.1; x <= 2.0; x += 0.1) {
    CHECK_MESSAGE(std::fabs(log_barnes_hasse(x).value - static_cast<double>(oracle::log_barnes_g1p(x))) < 1e-8,
                  "x = " << x);
  }
}

TEST_CASE("limit at zero") {
  const double ref1 = hurwitz_zeta_sderiv(1, -1.0, 1.0).value;
  CHECK(std::fabs(zeta_limit_at_zero(1, 1, 1e-3).value - ref1) < 5e-3);
  CHECK(std::fabs(zeta_limit_at_zero(0, 1, 1e-4).value + 1.0 / 12) < 1e-3);
  // The subtracted x^m log^j x term is already negligible at x = 1e-6.
  const double x = 1e-6;
  CHECK(std::fabs(x * std::log(x)) < 1e-4);
  CHECK(std::fabs(x * x * std::log(x) * std::log(x)) < 1e-4);
  CHECK_THROWS(zeta_limit_at_zero(1, 0, 1e-3));
  CHECK_THROWS(zeta_limit_at_zero(1, 1, 0.5));
}

TEST_CASE("bernoulli polynomials") {
  const BernoulliPoly b0 = bernoulli_poly(0);
  REQUIRE(b0.coeffs.size() == 1);
  CHECK(b0.coeff_string(0) == "1");

  const BernoulliPoly b1 = bernoulli_poly(1);
  REQUIRE(b1.coeffs.size() == 2);
  CHECK(b1.coeff_string(0) == "-1/2");
  CHECK(b1.coeff_string(1) == "1");

  const BernoulliPoly b2 = bernoulli_poly(2);
  REQUIRE(b2.coeffs.size() == 3);
  CHECK(b2.coeffs[0] == Rational(1, 6));
  CHECK(b2.coeffs[1] == Rational(-1));
  CHECK(b2.coeffs[2] == Rational(1));
  CHECK(b2.constant() == Rational(1, 6));

  CHECK(bernoulli_poly(12).constant() == Rational(-691, 2730));
  CHECK(bernoulli_poly(32).constant() == Rational(boost::multiprecision::cpp_int("-7709321041217"), 510));
  CHECK_THROWS_AS(bernoulli_poly(33), CapacityError);
  CHECK_THROWS_AS(bernoulli_poly(-1), CapacityError);
}

TEST_CASE("bernoulli polynomials against the brute-force double sum") {
  // Oracle: evaluate sum_n 1/(n+1) sum_k C(n,k) (-1)^k (k+x)^m at rational x.
  for (int m = 0; m <= 10; ++m) {
    const BernoulliPoly b = bernoulli_poly(m);
    for (const Rational& x : {Rational(0), Rational(1, 3), Rational(5, 2)}) {
      Rational total = 0;
      for (int n = 0; n <= m; ++n) {
        Rational inner = 0;
        Rational binom = 1;
        for (int k = 0; k <= n; ++k) {
          Rational p = 1;
          for (int e = 0; e < m; ++e) p *= (x + k);
          inner += ((k % 2) ? -binom : binom) * p;
          binom = binom * (n - k) / (k + 1);
        }
        total += inner / (n + 1);
      }
      CHECK_MESSAGE(b.eval(x) == total, "m = " << m);
    }
  }
}

TEST_CASE("bernoulli properties") {
  for (int m = 1; m <= 20; ++m) {
    const BernoulliPoly b = bernoulli_poly(m);
    // B_m(x+1) - B_m(x) = m x^(m-1).
    const Rational x(3, 7);
    Rational xp = 1;
    for (int e = 0; e < m - 1; ++e) xp *= x;
    CHECK(b.eval(x + 1) - b.eval(x) == m * xp);
    // B_m(1-x) = (-1)^m B_m(x).
    CHECK(b.eval(1 - x) == ((m % 2) ? -b.eval(x) : b.eval(x)));
    CHECK(std::fabs(b.eval(0.3) - static_cast<double>(b.eval(Rational(3, 10)))) < 1e-12);
  }
}

TEST_CASE("finite vanishing of alternating binomial sums") {
  for (int m = 0; m <= 8; ++m) {
    for (int n = m + 1; n <= m + 6; ++n) {
      for (const auto& c : alternating_binomial_power_sum(n, m)) CHECK(c == 0);
    }
    // n = m gives the constant (-1)^m m!.
    const auto top = alternating_binomial_power_sum(m, m);
    Rational fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    CHECK(top[0] == ((m % 2) ? -fact : fact));
  }
}

TEST_CASE("shifted argument stays exact at negative integer s") {
  // zeta(-2, x) = -B_3(x)/3 = -(x^3 - 1.5 x^2 + 0.5 x)/3, exact in binary128 for x = 0.3.
  const SeriesValue v = hurwitz_zeta(-2.0, 0.3);
  CHECK(std::fabs(v.value - (-0.014)) < 4e-18);
  CHECK(std::fabs(v.value - (-0.014)) <= v.err_estimate + 2e-18);
}

TEST_CASE("double evaluation of B_m rounds the exact value once") {
  // B_8(2) = B_8 + 8 = 239/30, so zeta(-7, 2) = -239/240.
  CHECK(zeta_neg_int(8, 2.0) == -239.0 / 240.0);
  CHECK(bernoulli_poly(3).eval(0.5) == 0.0);
}
