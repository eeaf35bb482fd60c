// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "hasse.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace dblgamma::detail {
namespace {

constexpr double kQuadEps = 1.9259299443872358530559779425849273e-34;

// base^p, using repeated multiplication when p is a small integer.
quad quad_pow(quad base, double p) {
  if (p == std::nearbyint(p) && std::fabs(p) <= 64.0) {
    const int e = static_cast<int>(std::fabs(p));
    quad r = 1;
    quad b = base;
    for (int k = e; k > 0; k >>= 1) {
      if (k & 1) r *= b;
      b *= b;
    }
    return p < 0.0 ? 1 / r : r;
  }
  return powq(base, static_cast<quad>(p));
}

}  // namespace

int shift_count(double x) {
  if (x >= kHasseShiftTarget) return 0;
  return static_cast<int>(std::ceil(kHasseShiftTarget - x));
}

std::array<quad, 3> shifted_power_log_sums(double x, int M, double p, int jmax) {
  std::array<quad, 3> acc{};
  for (int k = 0; k < M; ++k) {
    const quad base = static_cast<quad>(k) + static_cast<quad>(x);
    if (base == 0) {
      if (p > 0.0) continue;
      throw DomainError("Hurwitz zeta: argument x = 0 with non-positive power");
    }
    quad t = quad_pow(base, p);
    acc[0] += t;
    if (jmax > 0) {
      const quad lg = logq(base);
      for (int j = 1; j <= jmax; ++j) {
        t *= lg;
        acc[j] += t;
      }
    }
  }
  return acc;
}

quad shifted_power_log_sum(double x, int M, double p, int j) {
  return shifted_power_log_sums(x, M, p, j)[j];
}

HasseSums hasse_double_sums(double s, quad y, int jmax, const EvalOptions& opts) {
  opts.validate();
  if (!(y > 0.0)) throw DomainError("Hasse sums require y > 0");
  if (jmax < 0 || jmax > 2) throw InvalidArgument("Hasse sums support j in {0,1,2}");

  const std::uint64_t cap = std::min<std::uint64_t>(opts.max_terms, kHasseOuterCap);
  const double expo = 1.0 - s;

  // Error in D_j is amplified by up to 1/|s-1| per level when the derivatives
  // are unwound, so the stopping rule looks at the amplified magnitude.
  const double inv = 1.0 / std::fmin(1.0, std::fabs(s - 1.0));
  const double amp = std::pow(inv * 3.0, jmax) * inv;

  std::vector<std::array<quad, 3>> f;  // f[k][j] = log^j(k+y) (k+y)^{1-s}
  std::vector<quad> binom{1};          // row n of Pascal's triangle, exact in binary128
  f.reserve(64);
  double fmax = 0.0;                   // max_k,j |f[k][j]|
  double two_n = 1.0;

  HasseSums out;
  SeriesStopRule rule(opts);
  double rounding = 0.0;
  int stalled = 0;
  for (std::uint64_t n = 0; n < cap; ++n) {
    {
      const quad base = static_cast<quad>(n) + y;
      const quad p = quad_pow(base, expo);
      const quad lg = jmax > 0 ? logq(base) : quad(0);
      f.push_back({p, p * lg, p * lg * lg});
      for (int j = 0; j <= jmax; ++j) fmax = std::fmax(fmax, std::fabs(static_cast<double>(f.back()[j])));
    }
    if (n > 0) {
      binom.push_back(1);
      for (std::size_t k = n - 1; k > 0; --k) binom[k] += binom[k - 1];
    }
    std::array<quad, 3> inner{};
    for (std::size_t k = 0; k <= n; ++k) {
      const quad c = (k % 2 == 0) ? binom[k] : -binom[k];
      for (int j = 0; j <= jmax; ++j) inner[j] += c * f[k][j];
    }
    double term_max = 0.0;
    const quad w = 1 / static_cast<quad>(n + 1);
    for (int j = 0; j <= jmax; ++j) {
      const quad t = inner[j] * w;
      out.d[j] += t;
      term_max = std::fmax(term_max, std::fabs(static_cast<double>(t)));
    }
    if (!std::isfinite(term_max)) {
      throw EvaluationError("Hasse outer term " + std::to_string(n) + " is not finite", n);
    }
    // sum_k C(n,k) |f(k)| <= 2^n max |f|
    const double noise = 4.0 * kQuadEps * two_n * fmax / static_cast<double>(n + 1);
    rounding += noise;
    two_n *= 2.0;
    out.terms = n + 1;
    double partial = 0.0;
    for (int j = 0; j <= jmax; ++j) {
      partial = std::fmax(partial, std::fabs(static_cast<double>(out.d[j])));
    }
    if (rule.feed(term_max * amp, partial * amp)) {
      out.converged = true;
      out.err = rule.trailing_max() / amp + rounding;
      return out;
    }
    // Once the terms are lost in rounding noise, which grows like 2^n, more
    // terms only add noise. Stop with what has been reached.
    stalled = term_max <= noise ? stalled + 1 : 0;
    if (stalled >= opts.consecutive_small) {
      out.err = rule.last_magnitude() / amp + rounding;
      out.converged = out.err * amp <= opts.threshold(partial * amp);
      return out;
    }
  }
  out.converged = false;
  out.err = std::fmax(rule.last_magnitude(), rule.trailing_max()) / amp + rounding;
  return out;
}

HurwitzDerivs hurwitz_derivs(double s, double x, int jmax, const EvalOptions& opts) {
  const int M = shift_count(x);
  const quad y = static_cast<quad>(x) + M;
  const HasseSums h = hasse_double_sums(s, y, jmax, opts);

  const quad sm1 = static_cast<quad>(s) - 1;
  HurwitzDerivs out;
  // D0 = (s-1) z, D1 = -[(s-1) z' + z], D2 = (s-1) z'' + 2 z'
  out.z[0] = h.d[0] / sm1;
  if (jmax >= 1) out.z[1] = (-h.d[1] - out.z[0]) / sm1;
  if (jmax >= 2) out.z[2] = (h.d[2] - 2 * out.z[1]) / sm1;

  // zeta^{(j)}(s, x) = zeta^{(j)}(s, y) + sum_{k<M} (-log(k+x))^j (k+x)^{-s}
  const auto shift = shifted_power_log_sums(x, M, -s, jmax);
  for (int j = 0; j <= jmax; ++j) out.z[j] += (j % 2 == 0) ? shift[j] : -shift[j];

  const double inv = 1.0 / std::fabs(s - 1.0);
  double err = h.err * inv;
  if (jmax >= 1) err = (h.err + err) * inv;
  if (jmax >= 2) err = (h.err + 2.0 * err) * inv;
  out.err = err;
  out.terms = h.terms;
  out.converged = h.converged;
  return out;
}

}  // namespace dblgamma::detail
