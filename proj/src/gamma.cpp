// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/gamma.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dblgamma {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMaxArgument = 1e7;  // argument reduction is O(x)

void require_positive(double x, const char* fn) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw DomainError(std::string(fn) + ": argument must be finite and > 0, got " +
                      std::to_string(x));
  }
  if (x > kMaxArgument) {
    throw CapacityError(std::string(fn) + ": argument exceeds reduction cap 1e7");
  }
}

// Weierstrass log-sum for log Gamma(1+t), t in [0, 1).
SeriesValue log_gamma_1p_core(double t, const EvalOptions& opts) {
  SeriesValue out;
  if (t == 0.0) {
    out.converged = true;
    return out;
  }
  const int J = 1 + opts.tail_order;
  const double scale = std::pow(std::fabs(t), J + 1) / ((J + 1.0) * J);
  const double target = 0.25 * opts.abs_tol;
  const std::uint64_t N = terms_for_tail_bound(scale, J, target, 16, opts.max_terms);

  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    sum.add(log1p_remainder(t / static_cast<double>(n), 1));
  }
  // Tail of log(1+t/n) - t/n = sum_{j>=2} (-1)^{j+1} t^j / (j n^j).
  double tj = t;
  for (int j = 2; j <= J && opts.tail_order > 0; ++j) {
    tj *= t;
    sum.add(((j % 2 == 1) ? tj : -tj) / j * power_tail(j, N));
  }
  CompensatedSum total(-kEulerGamma * t);
  total.add(-sum.value());
  out.value = total.value();
  out.terms_used = N;
  const double bound = scale * std::pow(static_cast<double>(N), -J);
  out.err_estimate = bound + 8.0 * kEps * (std::fabs(kEulerGamma * t) + sum.magnitude());
  out.converged = bound <= target;
  return out;
}

}  // namespace

SeriesValue log_gamma(double x, const EvalOptions& opts) {
  opts.validate();
  require_positive(x, "log_gamma");
  CompensatedSum shift;
  double t;
  if (x < 1.0) {
    t = x;
    shift.add(-std::log(x));
  } else {
    const double k = std::floor(x) - 1.0;
    t = (x - 1.0) - k;
    for (double i = 1.0; i <= k; i += 1.0) shift.add(std::log(t + i));
  }
  SeriesValue out = log_gamma_1p_core(t, opts);
  out.value += shift.value();
  out.err_estimate += 4.0 * kEps * shift.magnitude();
  return out;
}

SeriesValue log_gamma_alt(double x, const EvalOptions& opts) {
  opts.validate();
  require_positive(x, "log_gamma_alt");
  double t = x - 1.0;
  CompensatedSum shift;
  while (t > 2.0) {
    shift.add(std::log(t));
    t -= 1.0;
  }
  SeriesValue out;
  out.converged = true;
  if (t != 0.0 && t != 1.0) {
    const int J = 1 + opts.tail_order;
    const double at = std::fabs(t);
    const double scale = (at + std::pow(at, J + 1)) / ((J + 1.0) * J);
    const double target = 0.25 * opts.abs_tol;
    const std::uint64_t N = terms_for_tail_bound(scale, J, target, 16, opts.max_terms);
    CompensatedSum sum;
    for (std::uint64_t n = 1; n <= N; ++n) {
      const double inv = 1.0 / static_cast<double>(n);
      sum.add(t * log1p_remainder(inv, 1) - log1p_remainder(t * inv, 1));
    }
    double tj = t;
    for (int j = 2; j <= J && opts.tail_order > 0; ++j) {
      tj *= t;
      const double c = ((j % 2 == 1) ? 1.0 : -1.0) * (t - tj) / j;
      sum.add(c * power_tail(j, N));
    }
    const double bound = scale * std::pow(static_cast<double>(N), -J);
    out.value = sum.value();
    out.terms_used = N;
    out.err_estimate = bound + 8.0 * kEps * sum.magnitude();
    out.converged = bound <= target;
  }
  out.value += shift.value();
  out.err_estimate += 4.0 * kEps * shift.magnitude();
  return out;
}

SeriesValue digamma(double x, const EvalOptions& opts) {
  opts.validate();
  require_positive(x, "digamma");
  CompensatedSum shift;
  double r = x;
  if (r < 1.0) {
    shift.add(-1.0 / r);
    r += 1.0;
  } else {
    const double k = std::floor(r) - 1.0;
    r -= k;
    for (double i = 0.0; i < k; i += 1.0) shift.add(1.0 / (r + i));
  }
  // r in [1, 2]
  const int J = opts.tail_order;
  const double scale = std::pow(r, J + 1) / (J + 1.0);
  const double target = 0.25 * opts.abs_tol;
  const std::uint64_t N = terms_for_tail_bound(scale, J + 1, target, 16, opts.max_terms);

  CompensatedSum sum(-kEulerGamma);
  sum.add(-1.0 / r);
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    sum.add(r / (m * (m + r)));
  }
  // 1/m - 1/(m+r) = sum_{j>=1} (-1)^{j+1} r^j / m^{j+1}
  double rj = 1.0;
  for (int j = 1; j <= J; ++j) {
    rj *= r;
    sum.add(((j % 2 == 1) ? rj : -rj) * power_tail(j + 1, N));
  }
  SeriesValue out;
  const double bound = scale * std::pow(static_cast<double>(N), -(J + 1));
  out.value = sum.value() + shift.value();
  out.terms_used = N;
  out.err_estimate = bound + 8.0 * kEps * (sum.magnitude() + shift.magnitude());
  out.converged = bound <= target;
  return out;
}

SeriesValue digamma_alt(double x, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(x) || !(x > -1.0)) {
    throw DomainError("digamma_alt: argument must be finite and > -1, got " + std::to_string(x));
  }
  if (x > kMaxArgument) throw CapacityError("digamma_alt: argument exceeds reduction cap 1e7");
  // psi(1+x) = psi(x) + 1/x moves x into (-1, 3].
  CompensatedSum shift;
  while (x > 3.0) {
    shift.add(1.0 / x);
    x -= 1.0;
  }
  const int J = 1 + opts.tail_order;
  const double ax = std::fabs(x);
  const double scale = (std::pow(ax, J) + 1.0 / (J + 1.0)) / J;
  const double target = 0.25 * opts.abs_tol;
  const std::uint64_t N = terms_for_tail_bound(scale, J, target, 16, opts.max_terms);

  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    // log(1+1/n) - 1/(n+x) = [log(1+1/n) - 1/n] + x/(n(n+x))
    sum.add(log1p_remainder(1.0 / m, 1) + x / (m * (m + x)));
  }
  // Coefficient of n^-j in the expanded term: (-1)^j (x^{j-1} - 1/j).
  double xj = x;  // x^{j-1}
  for (int j = 2; j <= J && opts.tail_order > 0; ++j) {
    const double c = ((j % 2 == 0) ? 1.0 : -1.0) * (xj - 1.0 / j);
    sum.add(c * power_tail(j, N));
    xj *= x;
  }
  SeriesValue out;
  const double bound = scale * std::pow(static_cast<double>(N), -J);
  out.value = sum.value() + shift.value();
  out.terms_used = N;
  out.err_estimate = bound + 8.0 * kEps * (sum.magnitude() + shift.magnitude());
  out.converged = bound <= target;
  return out;
}

double raabe_closed(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("raabe_closed: argument must be >= 0, got " + std::to_string(x));
  }
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  if (x == 0.0) return half_log_2pi;
  return x * std::log(x) - x + half_log_2pi;
}

}  // namespace dblgamma
