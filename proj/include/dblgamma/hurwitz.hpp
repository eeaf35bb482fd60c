// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

#include <cstdint>
#include <utility>

#include "dblgamma/bernoulli.hpp"
#include "dblgamma/core_series.hpp"

namespace dblgamma {

/// |s - 1| below this is treated as the pole.
inline constexpr double kPoleExclusion = 1e-6;

/// Hurwitz zeta(s, x) for real s != 1 and x > 0 from Hasse's globally
/// convergent series
///   zeta(s, x) = 1/(s-1) sum_n 1/(n+1) sum_k C(n,k) (-1)^k (k+x)^{1-s}.
/// Small x is first moved up with zeta(s,x) = zeta(s,x+1) + x^-s. For s > 2
/// the result is cross-checked against hurwitz_zeta_direct and the larger of
/// the two error figures is reported.
SeriesValue hurwitz_zeta(double s, double x, const EvalOptions& opts = {});

/// Direct Dirichlet summation with an Euler-Maclaurin tail, s > 1 only.
SeriesValue hurwitz_zeta_direct(double s, double x, const EvalOptions& opts = {});

/// d^j/ds^j zeta(s, x) for j in {1, 2}, from the s-derivatives of the Hasse
/// series:
///   (s-1) zeta'  + zeta    = -sum_n 1/(n+1) sum_k C(n,k)(-1)^k log(k+x) (k+x)^{1-s}
///   (s-1) zeta'' + 2 zeta' =  sum_n 1/(n+1) sum_k C(n,k)(-1)^k log^2(k+x) (k+x)^{1-s}
SeriesValue hurwitz_zeta_sderiv(int j, double s, double x, const EvalOptions& opts = {});

/// zeta^{(j)}(-m) = zeta^{(j)}(-m, 1), j in {0,1,2}, m in [0, 16]. Computed
/// once per process at tight tolerance and cached.
double zeta_deriv_constant(int j, int m);

/// zeta'(0, x) = log Gamma(x) - log(2 pi)/2 (Lerch), via module gamma.
double lerch_zeta_prime0(double x, const EvalOptions& opts = {});

/// log G(1+x) - x log Gamma(x), via modules barnes and gamma.
double gosper_vardi_lhs(double x, const EvalOptions& opts = {});

/// zeta'(-1) - zeta'(-1, x), via the Hasse derivative series.
double gosper_vardi_rhs(double x, const EvalOptions& opts = {});

/// Right side of n int_0^x zeta'(1-n, u) du:
///   n >= 1: [B_{n+1} - B_{n+1}(x)] / (n(n+1)) + zeta'(-n, x) - zeta'(-n)
///   n == 0: (x - x^2)/2 + x log Gamma(x) - log G(1+x)
double adamchik_rhs(int n, double x, const EvalOptions& opts = {});

/// Right side of n int_1^x zeta''(1-n, u) du for n >= 1:
///   zeta''(-n, x) - zeta''(-n) + (2/n) adamchik_rhs(n, x)
double adamchik_dd_rhs(int n, double x, const EvalOptions& opts = {});

/// Right side of int_0^x zeta''(0, u) du:
///   zeta''(-1, x) - zeta''(-1) + x - x^2 + 2 [x log Gamma(x) - log G(1+x)]
double zeta_dd0_integral_rhs(double x, const EvalOptions& opts = {});

/// Two cutoff-N estimates of zeta''(0):
///   telescoped: -2 - (N+1/2) log^2(N+1) + 2(N+1) log(N+1) - 2N + sum_{k<=N} log^2 k
///   classical:  sum_{k<=N} log^2 k - (N+1/2) log^2 N + 2N log N - 2N
struct ZetaDD0Limit {
  std::uint64_t N = 0;
  double telescoped = 0.0;
  double classical = 0.0;
  double difference = 0.0;
};
ZetaDD0Limit zeta_dd0_limit(std::uint64_t N);

/// (lhs, rhs) of zeta(s, 1/2) = (2^s - 1) zeta(s), or with `derivative` of
/// zeta'(s, 1/2) = (2^s - 1) zeta'(s) + 2^s log 2 zeta(s).
std::pair<double, double> zeta_half_relation(double s, bool derivative = false,
                                             const EvalOptions& opts = {});

/// log Gamma(x) from the double sum
///   sum_n 1/(n+1) sum_k C(n,k) (-1)^k (k+x) log(k+x) + 1/2 - x + log(2 pi)/2.
SeriesValue log_gamma_hasse(double x, const EvalOptions& opts = {});

/// log G(1+x), x >= 0, from
///   -1/2 sum_n 1/(n+1) sum_k C(n,k)(-1)^k (k+x)^2 log(k+x)
///   + x log Gamma(x) + B_2(x)/4 + zeta'(-1),
/// with x log Gamma(x) taken from log_gamma_hasse (0 at x = 0).
SeriesValue log_barnes_hasse(double x, const EvalOptions& opts = {});

/// zeta^{(j)}(-m, x) - (-1)^j x^m log^j x for m >= 1 and 0 < x <= 0.1; tends to
/// zeta^{(j)}(-m) as x -> 0+.
SeriesValue zeta_limit_at_zero(int j, int m, double x, const EvalOptions& opts = {});

}  // namespace dblgamma
