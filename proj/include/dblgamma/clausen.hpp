// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

// Clausen's function Cl2 and the identities tying it to Barnes G and
// zeta'(-1, x).

#include <complex>
#include <cstdint>
#include <utility>

#include "dblgamma/core_series.hpp"

namespace dblgamma {

/// Cl2(theta) = sum_{n>=1} sin(n theta) / n^2.
///
/// The argument is reduced to [0, pi] using periodicity and odd symmetry.
/// A direct compensated sum over n <= N is followed by an Euler transform of
/// the remaining exponential sum. For reduced angles below 1/4 the series
///   t - t log t + sum_n |B_2n| t^(2n+1) / (2n (2n+1)!)
/// is used instead. Exactly 0 at multiples of pi.
SeriesValue clausen2(double theta, const EvalOptions& opts = {});

/// u log[Gamma(u) Gamma(1-u)] - log[G(1+u)/G(1-u)], 0 < u < 1. Equals
/// Cl2(2 pi u) / (2 pi).
double clausen_barnes_rhs(double u, const EvalOptions& opts = {});

/// u log(2 sin pi u) + Cl2(2 pi u) / (2 pi), 0 < u < 1. The cosine sum
/// -u sum cos(2 n pi u)/n is replaced by its closed form. Equals
/// int_0^u pi x cot(pi x) dx.
double fourier_kinkelin(double u, const EvalOptions& opts = {});

/// (Cl2(2 pi u) / (2 pi), zeta'(-1, u) - zeta'(-1, 1-u)) for 0 < u < 1.
std::pair<double, double> zeta_prime_reflection(double u, const EvalOptions& opts = {});

/// int_0^u pi x / sin(pi x) dx from its odd-harmonic Fourier expansion
///   -2u sum_{n>=0} cos((2n+1) pi u)/(2n+1) + (2/pi) sum_{n>=0} sin((2n+1) pi u)/(2n+1)^2,
/// using u log tan(pi u / 2) + (2/pi)[Cl2(pi u) - Cl2(2 pi u)/4] except when
/// |u - 1/2| < 1e-3, where cosecant_series_direct is used.
double cosecant_series_integral(double u, const EvalOptions& opts = {});

/// The same expansion summed directly, with the tail of both odd-harmonic
/// sums taken by the Euler transform. Valid on 0 < u < 1.
SeriesValue cosecant_series_direct(double u, const EvalOptions& opts = {});

/// f(u) = Cl2(pi u)/pi + (1-u) log Gamma(u) + log G(u), 0 < u < 1. Symmetric
/// under u -> 1 - u.
double clausen_f(double u, const EvalOptions& opts = {});

namespace detail {

/// sum_{m>=0} z^m / (alpha (n0+m) + beta)^p for p in {1, 2}, |z| = 1, z != 1,
/// by the Euler transform
///   sum_m z^m a_m = sum_k z^k / (1-z)^{k+1} Delta^k a_0,
/// with the forward differences of 1/(alpha n + beta)^p in closed form. The
/// transformed series is asymptotic; it is cut at its smallest term.
struct ExpSumTail {
  std::complex<double> value;
  double err = 0.0;
  int terms = 0;
};
ExpSumTail exp_sum_tail(std::complex<double> z, double alpha, double beta, std::uint64_t n0,
                        int p);

}  // namespace detail
}  // namespace dblgamma
