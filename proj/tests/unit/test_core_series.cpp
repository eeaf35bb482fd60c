// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "dblgamma/core_series.hpp"
#include "oracles.hpp"

using namespace dblgamma;

TEST_CASE("geometric series sums to one") {
  EvalOptions opts;
  opts.abs_tol = 1e-12;
  const SeriesValue v = sum_until_converged([](std::uint64_t n) { return std::ldexp(1.0, -static_cast<int>(n)); }, opts);
  CHECK(v.converged);
  CHECK(std::fabs(v.value - 1.0) < 1e-11);
  CHECK(v.err_estimate < 1e-11);
}

TEST_CASE("all-zero terms stop after consecutive_small terms") {
  EvalOptions opts;
  const SeriesValue v = sum_until_converged([](std::uint64_t) { return 0.0; }, opts);
  CHECK(v.converged);
  CHECK(v.value == 0.0);
  CHECK(v.terms_used == static_cast<std::uint64_t>(opts.consecutive_small));

  opts.consecutive_small = 7;
  CHECK(sum_until_converged([](std::uint64_t) { return 0.0; }, opts).terms_used == 7);
}

TEST_CASE("inverse squares against a direct sum with tail bound") {
  // Direct oracle: N = 10^6 terms plus the 1/N tail correction.
  long double direct = 0;
  const std::uint64_t N = 1000000;
  for (std::uint64_t n = N; n >= 1; --n) direct += 1.0L / (static_cast<long double>(n) * n);
  direct += 1.0L / N - 0.5L / (static_cast<long double>(N) * N);

  EvalOptions opts;
  opts.max_terms = 2000000;
  opts.abs_tol = 1e-12;
  const SeriesValue v = sum_until_converged(
      [](std::uint64_t n) { return 1.0 / (static_cast<double>(n) * static_cast<double>(n)); }, opts);
  // Without acceleration the raw sum stops near 1/sqrt(abs_tol) terms and
  // the neglected tail is about 1/N; the estimate reports the last terms only.
  CHECK(v.converged);
  CHECK(std::fabs(v.value + 1.0 / static_cast<double>(v.terms_used) - static_cast<double>(direct)) < 1e-9);
  CHECK(std::fabs(static_cast<double>(direct) - static_cast<double>(oracle::kPi * oracle::kPi / 6)) < 1e-12);
}

TEST_CASE("non-finite term raises an evaluation error carrying the index") {
  EvalOptions opts;
  try {
    sum_until_converged([](std::uint64_t n) { return n == 5 ? NAN : 1.0 / static_cast<double>(n * n * n); }, opts);
    FAIL("expected EvaluationError");
  } catch (const EvaluationError& e) {
    CHECK(e.index() == 5);
    CHECK(e.kind() == ErrorKind::non_finite);
  }
}

TEST_CASE("term cap returns converged = false") {
  EvalOptions opts;
  opts.max_terms = 100;
  const SeriesValue v = sum_until_converged([](std::uint64_t n) { return 1.0 / static_cast<double>(n); }, opts);
  CHECK_FALSE(v.converged);
  CHECK(v.terms_used == 100);
  CHECK(v.err_estimate > 0.0);
}

TEST_CASE("options validation") {
  EvalOptions o;
  CHECK_NOTHROW(o.validate());
  o.abs_tol = 0;
  o.rel_tol = 0;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
  o = EvalOptions{};
  o.abs_tol = NAN;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
  o = EvalOptions{};
  o.max_terms = 0;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
  o = EvalOptions{};
  o.consecutive_small = 0;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);
  o = EvalOptions{};
  o.tail_order = -1;
  CHECK_THROWS_AS(o.validate(), InvalidArgument);

  const EvalOptions d;
  CHECK(d.abs_tol == 1e-12);
  CHECK(d.rel_tol == 0.0);
  CHECK(d.max_terms == 1000000);
  CHECK(d.tail_order == 4);
  CHECK(d.consecutive_small == 3);
  CHECK(d.tightened(10).abs_tol == doctest::Approx(1e-13));
}

TEST_CASE("compensated sum recovers cancelled low-order bits") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  // Plain summation returns 0 here; the compensated sum keeps 12+ digits.
  CHECK(std::fabs(s.value() - 1e-13) < 1e-13 * 1e-12);
}

TEST_CASE("euler gamma partial sums") {
  SUBCASE("N = 10 equals H_10 - log 11") {
    long double h = 0;
    for (int k = 1; k <= 10; ++k) h += 1.0L / k;
    const double expect = static_cast<double>(h - std::log(11.0L));
    CHECK(std::fabs(euler_gamma_partial(10) - expect) < 1e-15);
    CHECK(std::fabs(euler_gamma_partial(10) - 0.5310729) < 1e-7);
  }
  SUBCASE("telescoping within 4 units of accumulated round-off for N <= 10^4") {
    for (std::uint64_t N = 1; N <= 10000; N += (N < 100 ? 1 : 97)) {
      const double a = euler_gamma_partial(N);
      const double b = harmonic_minus_log(N);
      // One unit is eps times the magnitude of the quantities being combined.
      const double unit = 2.220446049250313e-16 * 2.0 * (std::log(static_cast<double>(N) + 1.0) + 1.0);
      CHECK(std::fabs(a - b) <= 4 * unit);
    }
  }
  SUBCASE("partial sums increase") {
    double prev = 0.0;
    for (std::uint64_t N = 1; N <= 2000; ++N) {
      const double p = euler_gamma_partial(N);
      CHECK(p > prev);
      prev = p;
    }
  }
}

TEST_CASE("euler gamma converged value and stored constant") {
  const SeriesValue g = euler_gamma();
  CHECK(g.converged);
  CHECK(std::fabs(g.value - static_cast<double>(oracle::kEulerGamma)) < 1e-10);
  CHECK(std::fabs(g.value - static_cast<double>(oracle::kEulerGamma)) <= g.err_estimate + 1e-15);
  CHECK(std::fabs(kEulerGamma - g.value) < 1e-10);
  // -psi(1) from the asymptotic oracle.
  CHECK(std::fabs(kEulerGamma + static_cast<double>(oracle::digamma(1.0L))) < 1e-15);
}

TEST_CASE("evaluation is deterministic") {
  const SeriesValue a = euler_gamma();
  const SeriesValue b = euler_gamma();
  CHECK(a.value == b.value);
  CHECK(a.err_estimate == b.err_estimate);
  CHECK(a.terms_used == b.terms_used);
}

TEST_CASE("power tail") {
  // sum_{n>N} n^-2 = psi'(N+1); compare with a long-double direct sum.
  for (const std::uint64_t N : {1ULL, 10ULL, 1000ULL}) {
    const long double ref = oracle::zeta(2) - [&] {
      long double s = 0;
      for (std::uint64_t n = 1; n <= N; ++n) s += 1.0L / (static_cast<long double>(n) * n);
      return s;
    }();
    CHECK(std::fabs(power_tail(2, N) / static_cast<double>(ref) - 1.0) < 1e-13);
  }
  const long double ref3 = oracle::zeta(3) - 1.0L - 1.0L / 8;
  CHECK(std::fabs(power_tail(3, 2) / static_cast<double>(ref3) - 1.0) < 1e-13);
}

TEST_CASE("log1p remainder") {
  const double z = 1e-3;
  const long double exact = std::log1p(static_cast<long double>(z)) - (z - z * z / 2.0L);
  CHECK(std::fabs(log1p_remainder(z, 2) / static_cast<double>(exact) - 1.0) < 1e-12);
  CHECK(log1p_remainder(0.0, 3) == 0.0);
}

TEST_CASE("terms for tail bound") {
  CHECK(terms_for_tail_bound(1.0, 1, 1e-3, 1, 1000000) == 1000);
  CHECK(terms_for_tail_bound(1.0, 2, 1e-6, 1, 1000000) == 1000);
  CHECK(terms_for_tail_bound(1.0, 1, 1e-12, 1, 5000) == 5000);
  CHECK(terms_for_tail_bound(1e-9, 1, 1.0, 50, 5000) == 50);
}
