// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

#include <cstdint>

#include "dblgamma/core_series.hpp"

namespace dblgamma {

/// log G(1+x) for x > -1, G the Barnes double gamma function, from
///   log G(1+x) = x log(2 pi)/2 - x(1+x)/2 - gamma x^2/2
///              + sum_n [x^2/(2n) - x + n log(1 + x/n)].
/// The series is used on (-1, 1]; larger x go through G(1+x) = Gamma(x) G(x).
SeriesValue log_barnes_g1p(double x, const EvalOptions& opts = {});

/// G'(1+x)/G(1+x) = log(2 pi)/2 - 1/2 - x + x psi(1+x), x > -1.
SeriesValue barnes_log_deriv(double x, const EvalOptions& opts = {});

/// Closed form of the integral of log Gamma(1+x) over [0, u], u >= 0:
///   (log(2 pi) - 1) u/2 - u^2/2 + u log Gamma(1+u) - log G(1+u).
double alexeiewsky_rhs(double u, const EvalOptions& opts = {});

/// Integral of pi x cot(pi x) over [0, u] for 0 <= u < 1:
///   u log(2 pi) + log G(1-u) - log G(1+u).
/// The singular endpoint u = 1 is refused with DomainError.
double kinkelin_closed(double u, const EvalOptions& opts = {});

/// Integral of pi x / sin(pi x) over [0, u] for 0 <= u < 1:
///   u log(2 pi) + log[G(1+u)/G(1-u)] - 4 log[G(1+u/2)/G(1-u/2)].
double wang_closed(double u, const EvalOptions& opts = {});

/// 1 + 2 x^2 sum_n 1/(x^2 - n^2), the partial-fraction form of pi x cot(pi x),
/// for non-integer x. Each denominator is formed as (x-n)(x+n).
SeriesValue cot_partial_fractions(double x, const EvalOptions& opts = {});

/// sum_{n<=N} log(1 - u^2/n^2) for |u| < 1 (log of the partial sine product).
double sine_log_product_partial(double u, std::uint64_t N);

/// The same sum continued to infinity with a power-tail correction; tends to
/// log(sin(pi u) / (pi u)).
SeriesValue sine_log_product(double u, const EvalOptions& opts = {});

}  // namespace dblgamma
