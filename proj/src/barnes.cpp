// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/barnes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dblgamma/gamma.hpp"

namespace dblgamma {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLog2Pi = std::log(2.0 * std::numbers::pi);

// The defining series on (-1, 1].
SeriesValue log_barnes_core(double x, const EvalOptions& opts) {
  SeriesValue out;
  if (x == 0.0) {
    out.converged = true;
    return out;
  }
  const int J = 2 + opts.tail_order;  // highest power of x corrected
  const double ax = std::fabs(x);
  const double scale = std::pow(ax, J + 1) / ((J + 1.0) * (J - 1.0));
  const double target = 0.25 * opts.abs_tol;
  const std::uint64_t N = terms_for_tail_bound(scale, J - 1, target, 16, opts.max_terms);

  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    // x^2/(2n) - x + n log(1 + x/n) = n [log(1 + x/n) - x/n + x^2/(2n^2)]
    sum.add(m * log1p_remainder(x / m, 2));
  }
  // n R(x/n) = sum_{j>=3} (-1)^{j+1} x^j / (j n^{j-1})
  double xj = x * x;
  for (int j = 3; j <= J; ++j) {
    xj *= x;
    sum.add(((j % 2 == 1) ? xj : -xj) / j * power_tail(j - 1, N));
  }
  CompensatedSum total(0.5 * x * kLog2Pi);
  total.add(-0.5 * x * (1.0 + x));
  total.add(-0.5 * kEulerGamma * x * x);
  total.add(sum.value());

  const double bound = scale * std::pow(static_cast<double>(N), -(J - 1));
  out.value = total.value();
  out.terms_used = N;
  out.err_estimate = bound + 8.0 * kEps * (total.magnitude() + sum.magnitude());
  out.converged = bound <= target;
  return out;
}

void require_unit_interval(double u, const char* fn) {
  if (!std::isfinite(u) || u < 0.0 || u >= 1.0) {
    throw DomainError(std::string(fn) + ": requires 0 <= u < 1, got " + std::to_string(u));
  }
}

}  // namespace

SeriesValue log_barnes_g1p(double x, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(x) || !(x > -1.0)) {
    throw DomainError("log_barnes_g1p: requires 1 + x > 0, got x = " + std::to_string(x));
  }
  if (x > 1e3) throw CapacityError("log_barnes_g1p: argument exceeds reduction cap 1e3");
  if (x <= 1.0) return log_barnes_core(x, opts);

  // log G(1+x) = log G(1+r) + sum_{i=1}^{k} log Gamma(r+i)
  const double k = std::ceil(x - 1.0);
  const double r = x - k;
  SeriesValue out = log_barnes_core(r, opts);
  CompensatedSum acc(out.value);
  for (double i = 1.0; i <= k; i += 1.0) {
    const SeriesValue lg = log_gamma(r + i, opts);
    acc.add(lg.value);
    out.err_estimate += lg.err_estimate;
    out.converged = out.converged && lg.converged;
  }
  out.value = acc.value();
  return out;
}

SeriesValue barnes_log_deriv(double x, const EvalOptions& opts) {
  if (!std::isfinite(x) || !(x > -1.0)) {
    throw DomainError("barnes_log_deriv: requires 1 + x > 0, got x = " + std::to_string(x));
  }
  const SeriesValue psi = digamma(1.0 + x, opts);
  SeriesValue out = psi;
  out.value = 0.5 * kLog2Pi - 0.5 - x + x * psi.value;
  out.err_estimate = std::fabs(x) * psi.err_estimate + 4.0 * kEps * (1.0 + std::fabs(x));
  return out;
}

double alexeiewsky_rhs(double u, const EvalOptions& opts) {
  if (!std::isfinite(u) || u < 0.0) {
    throw DomainError("alexeiewsky_rhs: requires u >= 0, got " + std::to_string(u));
  }
  if (u == 0.0) return 0.0;
  const double lg = log_gamma(1.0 + u, opts).value;
  const double lG = log_barnes_g1p(u, opts).value;
  return 0.5 * (kLog2Pi - 1.0) * u - 0.5 * u * u + u * lg - lG;
}

double kinkelin_closed(double u, const EvalOptions& opts) {
  require_unit_interval(u, "kinkelin_closed");
  if (u == 0.0) return 0.0;
  return u * kLog2Pi + log_barnes_g1p(-u, opts).value - log_barnes_g1p(u, opts).value;
}

double wang_closed(double u, const EvalOptions& opts) {
  require_unit_interval(u, "wang_closed");
  if (u == 0.0) return 0.0;
  const double full = log_barnes_g1p(u, opts).value - log_barnes_g1p(-u, opts).value;
  const double half = log_barnes_g1p(0.5 * u, opts).value - log_barnes_g1p(-0.5 * u, opts).value;
  return u * kLog2Pi + full - 4.0 * half;
}

SeriesValue cot_partial_fractions(double x, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(x) || (x == std::nearbyint(x) && x != 0.0)) {
    throw DomainError("cot_partial_fractions: x must be finite and not a nonzero integer");
  }
  SeriesValue out;
  if (x == 0.0) {
    out.value = 1.0;
    out.converged = true;
    return out;
  }
  const int T = opts.tail_order;
  const double x2 = x * x;
  // Neglected tail after T corrections: x^{2T} / ((2T+1) N^{2T+1}).
  const double scale = std::pow(x2, T) / (2.0 * T + 1.0);
  const double target = 0.25 * opts.abs_tol / (2.0 * x2);
  const std::uint64_t min_n = 16 + static_cast<std::uint64_t>(2.0 * std::fabs(x));
  const std::uint64_t N = terms_for_tail_bound(scale, 2 * T + 1, target, min_n, opts.max_terms);

  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    sum.add(1.0 / ((x - m) * (x + m)));
  }
  // sum_{n>N} 1/(x^2 - n^2) = -sum_{i>=0} x^{2i} power_tail(2i+2, N)
  double x2i = 1.0;
  for (int i = 0; i < T; ++i) {
    sum.add(-x2i * power_tail(2 * i + 2, N));
    x2i *= x2;
  }
  const double bound = 2.0 * x2 * scale * std::pow(static_cast<double>(N), -(2 * T + 1));
  out.value = 1.0 + 2.0 * x2 * sum.value();
  out.terms_used = N;
  out.err_estimate = bound + 8.0 * kEps * (1.0 + 2.0 * x2 * sum.magnitude());
  out.converged = bound <= 0.25 * opts.abs_tol;
  return out;
}

double sine_log_product_partial(double u, std::uint64_t N) {
  if (!std::isfinite(u) || !(std::fabs(u) < 1.0)) {
    throw DomainError("sine_log_product_partial: requires |u| < 1");
  }
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    sum.add(std::log1p(-(u / m) * (u / m)));
  }
  return sum.value();
}

SeriesValue sine_log_product(double u, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(u) || !(std::fabs(u) < 1.0)) {
    throw DomainError("sine_log_product: requires |u| < 1");
  }
  SeriesValue out;
  out.converged = true;
  if (u == 0.0) return out;
  const int T = std::max(opts.tail_order, 0);
  const double u2 = u * u;
  // log(1 - z) = -sum_i z^i / i with z = u^2/n^2.
  const double scale = std::pow(u2, T + 1) / ((T + 1.0) * (2.0 * T + 1.0));
  const double target = 0.25 * opts.abs_tol;
  const std::uint64_t N = terms_for_tail_bound(scale, 2 * T + 1, target, 16, opts.max_terms);
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    sum.add(std::log1p(-(u / m) * (u / m)));
  }
  double u2i = 1.0;
  for (int i = 1; i <= T; ++i) {
    u2i *= u2;
    sum.add(-u2i / i * power_tail(2 * i, N));
  }
  const double bound = scale * std::pow(static_cast<double>(N), -(2 * T + 1));
  out.value = sum.value();
  out.terms_used = N;
  out.err_estimate = bound + 8.0 * kEps * sum.magnitude();
  out.converged = bound <= target;
  return out;
}

}  // namespace dblgamma
