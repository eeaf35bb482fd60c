// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#pragma once

#include "dblgamma/core_series.hpp"

namespace dblgamma {

/// log Gamma(x) for x > 0 from the logarithm of the Weierstrass product,
///   log Gamma(1+t) = -gamma t - sum_n [log(1 + t/n) - t/n],
/// evaluated for t in [0, 1) only; other arguments are moved there with
/// Gamma(1+u) = u Gamma(u).
SeriesValue log_gamma(double x, const EvalOptions& opts = {});

/// log Gamma(x) from sum_n [t log(1 + 1/n) - log(1 + t/n)], t = x - 1.
/// Independent of log_gamma except for the upward/downward recurrence used
/// when x > 3.
SeriesValue log_gamma_alt(double x, const EvalOptions& opts = {});

/// psi(x) = -gamma - 1/x + sum_m [1/m - 1/(m+x)], x reduced into [1, 2).
SeriesValue digamma(double x, const EvalOptions& opts = {});

/// psi(1+x) = sum_n [log(1 + 1/n) - 1/(n+x)] for x > -1.
SeriesValue digamma_alt(double x, const EvalOptions& opts = {});

/// x log x - x + log(2 pi)/2, the value of the integral of log Gamma over
/// [x, x+1]; the x = 0 limit is log(2 pi)/2.
double raabe_closed(double x);

}  // namespace dblgamma
