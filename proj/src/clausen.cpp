// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/clausen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "dblgamma/barnes.hpp"
#include "dblgamma/bernoulli.hpp"
#include "dblgamma/gamma.hpp"
#include "dblgamma/hurwitz.hpp"

namespace dblgamma {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kEulerTransformCap = 60;
// The transformed tail shrinks roughly like k! / (n0 |1-z|)^k, so the direct
// part runs until n0 |1-z| reaches this.
constexpr double kTailReach = 64.0;
constexpr std::uint64_t kMinDirect = 256;
// Below this angle the direct part would exceed kMinDirect terms; the
// small-angle Bernoulli series is used instead.
constexpr double kSmallAngle = kTailReach / static_cast<double>(kMinDirect);

void require_open_unit(double u, const char* fn) {
  if (!std::isfinite(u) || !(u > 0.0) || !(u < 1.0)) {
    throw DomainError(std::string(fn) + ": requires 0 < u < 1, got " + std::to_string(u));
  }
}

std::uint64_t direct_terms(double gap, const EvalOptions& opts) {
  const double want = std::ceil(kTailReach / gap);
  const double cap = static_cast<double>(opts.max_terms);
  return static_cast<std::uint64_t>(std::clamp(want, static_cast<double>(kMinDirect),
                                               std::max(cap, 1.0)));
}

// Cl2(t) = t - t log t + sum_n |B_2n| t^(2n+1) / (2n (2n+1)!), 0 < t < 2 pi.
SeriesValue clausen2_small(double t) {
  static const std::array<double, kMaxBernoulliDegree / 2> coeff = [] {
    std::array<double, kMaxBernoulliDegree / 2> c{};
    double fact = 1.0;  // (2n+1)!
    for (int n = 1; n <= kMaxBernoulliDegree / 2; ++n) {
      fact *= (2.0 * n) * (2.0 * n + 1.0);
      const double b = std::fabs(bernoulli_poly(2 * n).constant().convert_to<double>());
      c[n - 1] = b / (2.0 * n * fact);
    }
    return c;
  }();
  SeriesValue out;
  CompensatedSum sum;
  sum.add(t);
  sum.add(-t * std::log(t));
  const double t2 = t * t;
  double tp = t;
  double last = 0.0;
  for (std::size_t n = 0; n < coeff.size(); ++n) {
    tp *= t2;
    last = coeff[n] * tp;
    sum.add(last);
    out.terms_used = n + 1;
    if (last <= 0.25 * kEps * std::fabs(sum.value())) break;
  }
  out.value = sum.value();
  // Successive terms shrink by about (t / 2 pi)^2 < 1/600.
  out.err_estimate = last + 4.0 * kEps * sum.magnitude();
  out.converged = true;
  return out;
}

}  // namespace

namespace detail {

ExpSumTail exp_sum_tail(cplx z, double alpha, double beta, std::uint64_t n0, int p) {
  if (p != 1 && p != 2) throw InvalidArgument("exp_sum_tail: p must be 1 or 2");
  const cplx one_minus = 1.0 - z;
  if (std::abs(one_minus) == 0.0) throw DomainError("exp_sum_tail: z = 1");
  const cplx lead = 1.0 / one_minus;
  const cplx w = z * lead;

  ExpSumTail out;
  const double d0 = alpha * static_cast<double>(n0) + beta;
  double c = 1.0 / d0;       // (-alpha)^k k! / prod_{i<=k} (alpha (n0+i) + beta)
  double harm = 1.0 / d0;    // sum_{i<=k} 1 / (alpha (n0+i) + beta)
  cplx wk = lead;
  double prev = INFINITY;
  for (int k = 0; k < kEulerTransformCap; ++k) {
    const cplx t = wk * (p == 2 ? c * harm : c);
    const double mag = std::abs(t);
    if (mag > prev) break;  // asymptotic: stop at the smallest term
    out.value += t;
    out.err = mag;
    out.terms = k + 1;
    if (mag <= 0.25 * kEps * std::abs(out.value)) break;
    prev = mag;
    const double dk1 = alpha * static_cast<double>(n0 + k + 1) + beta;
    c *= -alpha * (k + 1) / dk1;
    harm += 1.0 / dk1;
    wk *= w;
  }
  return out;
}

}  // namespace detail

SeriesValue clausen2(double theta, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(theta)) throw DomainError("clausen2: theta must be finite");
  // Odd symmetry first, so that Cl2(-theta) = -Cl2(theta) holds exactly.
  double sign = theta < 0.0 ? -1.0 : 1.0;
  double t = std::fmod(std::fabs(theta), 2.0 * kPi);
  if (t > kPi) {
    t = 2.0 * kPi - t;
    sign = -sign;
  }
  SeriesValue out;
  if (t == 0.0 || t == kPi) {
    out.converged = true;
    return out;
  }
  if (t < kSmallAngle) {
    out = clausen2_small(t);
    out.value *= sign;
    out.converged = out.err_estimate <= opts.threshold(out.value);
    return out;
  }

  const std::uint64_t N = direct_terms(2.0 * std::sin(0.5 * t), opts);
  CompensatedSum sum;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const double m = static_cast<double>(n);
    sum.add(std::sin(m * t) / (m * m));
  }
  const cplx z = std::polar(1.0, t);
  const auto tail = detail::exp_sum_tail(z, 1.0, 0.0, N + 1, 2);
  const cplx phase = std::polar(1.0, static_cast<double>(N + 1) * t);
  sum.add((phase * tail.value).imag());

  out.value = sign * sum.value();
  out.terms_used = N + static_cast<std::uint64_t>(tail.terms);
  out.err_estimate = tail.err + 4.0 * kEps * sum.magnitude();
  out.converged = out.err_estimate <= opts.threshold(out.value);
  return out;
}

double clausen_barnes_rhs(double u, const EvalOptions& opts) {
  require_open_unit(u, "clausen_barnes_rhs");
  const double lg = log_gamma(u, opts).value + log_gamma(1.0 - u, opts).value;
  return u * lg - log_barnes_g1p(u, opts).value + log_barnes_g1p(-u, opts).value;
}

double fourier_kinkelin(double u, const EvalOptions& opts) {
  require_open_unit(u, "fourier_kinkelin");
  // -sum_{n>=1} cos(n x)/n = log(2 sin(x/2)), 0 < x < 2 pi
  const double cl = clausen2(2.0 * kPi * u, opts).value;
  return u * std::log(2.0 * std::sin(kPi * u)) + cl / (2.0 * kPi);
}

std::pair<double, double> zeta_prime_reflection(double u, const EvalOptions& opts) {
  require_open_unit(u, "zeta_prime_reflection");
  const double lhs = clausen2(2.0 * kPi * u, opts).value / (2.0 * kPi);
  const double rhs = hurwitz_zeta_sderiv(1, -1.0, u, opts).value -
                     hurwitz_zeta_sderiv(1, -1.0, 1.0 - u, opts).value;
  return {lhs, rhs};
}

double cosecant_series_integral(double u, const EvalOptions& opts) {
  require_open_unit(u, "cosecant_series_integral");
  if (std::fabs(u - 0.5) < 1e-3) return cosecant_series_direct(u, opts).value;
  // sum_{n>=0} cos((2n+1) x)/(2n+1) = -log|tan(x/2)|/2
  // sum_{n>=0} sin((2n+1) x)/(2n+1)^2 = Cl2(x) - Cl2(2x)/4
  const double x = kPi * u;
  const double odd_sin = clausen2(x, opts).value - 0.25 * clausen2(2.0 * x, opts).value;
  return u * std::log(std::tan(0.5 * x)) + (2.0 / kPi) * odd_sin;
}

SeriesValue cosecant_series_direct(double u, const EvalOptions& opts) {
  opts.validate();
  require_open_unit(u, "cosecant_series_direct");
  const double x = kPi * u;
  const std::uint64_t N = direct_terms(2.0 * std::sin(x), opts);

  // Re S_1 and Im S_2, S_p = sum_{n>=0} e^{i(2n+1)x} / (2n+1)^p
  CompensatedSum re1;
  CompensatedSum im2;
  for (std::uint64_t n = 0; n < N; ++n) {
    const double k = 2.0 * static_cast<double>(n) + 1.0;
    re1.add(std::cos(k * x) / k);
    im2.add(std::sin(k * x) / (k * k));
  }
  const cplx z = std::polar(1.0, 2.0 * x);
  const cplx phase = std::polar(1.0, (2.0 * static_cast<double>(N) + 1.0) * x);
  const auto t1 = detail::exp_sum_tail(z, 2.0, 1.0, N, 1);
  const auto t2 = detail::exp_sum_tail(z, 2.0, 1.0, N, 2);
  re1.add((phase * t1.value).real());
  im2.add((phase * t2.value).imag());

  SeriesValue out;
  out.value = -2.0 * u * re1.value() + (2.0 / kPi) * im2.value();
  out.terms_used = N;
  out.err_estimate = 2.0 * u * t1.err + t2.err +
                     4.0 * kEps * (2.0 * u * re1.magnitude() + im2.magnitude());
  out.converged = out.err_estimate <= opts.threshold(out.value);
  return out;
}

double clausen_f(double u, const EvalOptions& opts) {
  require_open_unit(u, "clausen_f");
  return clausen2(kPi * u, opts).value / kPi + (1.0 - u) * log_gamma(u, opts).value +
         log_barnes_g1p(u - 1.0, opts).value;
}

}  // namespace dblgamma
