// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The dblgamma Authors

#include "dblgamma/hurwitz.hpp"

#include <quadmath.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "dblgamma/barnes.hpp"
#include "dblgamma/gamma.hpp"
#include "hasse.hpp"

namespace dblgamma {
namespace {

using detail::quad;

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

void check_zeta_args(double s, double x, const char* fn) {
  if (!std::isfinite(s)) throw DomainError(std::string(fn) + ": s must be finite");
  if (std::fabs(s - 1.0) < kPoleExclusion) {
    throw PoleError(std::string(fn) + ": s = " + std::to_string(s) + " is at the pole s = 1");
  }
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw DomainError(std::string(fn) + ": requires x > 0, got " + std::to_string(x));
  }
}

SeriesValue to_series(quad v, const detail::HurwitzDerivs& h) {
  SeriesValue out;
  out.value = static_cast<double>(v);
  out.err_estimate = h.err + kEps * std::fabs(out.value);
  out.terms_used = h.terms;
  out.converged = h.converged;
  return out;
}

}  // namespace

SeriesValue hurwitz_zeta(double s, double x, const EvalOptions& opts) {
  opts.validate();
  check_zeta_args(s, x, "hurwitz_zeta");
  const auto h = detail::hurwitz_derivs(s, x, 0, opts);
  SeriesValue out = to_series(h.z[0], h);
  if (s > 2.0) {
    const SeriesValue direct = hurwitz_zeta_direct(s, x, opts);
    out.err_estimate = std::fmax(out.err_estimate,
                                 std::fabs(out.value - direct.value) + direct.err_estimate);
  }
  return out;
}

SeriesValue hurwitz_zeta_direct(double s, double x, const EvalOptions& opts) {
  opts.validate();
  check_zeta_args(s, x, "hurwitz_zeta_direct");
  if (!(s > 1.0)) throw DomainError("hurwitz_zeta_direct: requires s > 1");

  // Explicit terms until n + x >= 40, then an Euler-Maclaurin remainder:
  // sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_k B_{2k}/(2k)! f^{(2k-1)}(N).
  const std::uint64_t N =
      x >= 40.0 ? 0 : static_cast<std::uint64_t>(std::ceil(40.0 - x));
  CompensatedSum acc;
  for (std::uint64_t n = 0; n < N; ++n) acc.add(std::pow(static_cast<double>(n) + x, -s));
  const double L = static_cast<double>(N) + x;
  const double fL = std::pow(L, -s);
  acc.add(L * fL / (s - 1.0));
  acc.add(0.5 * fL);
  static constexpr double kB2kOverFact[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                            -1.0 / 1209600.0, 1.0 / 47900160.0};
  double rising = s;
  double pw = fL / L;
  double last = 0.0;
  for (int k = 0; k < 5; ++k) {
    last = kB2kOverFact[k] * rising * pw;
    acc.add(last);
    rising *= (s + 2.0 * k + 1.0) * (s + 2.0 * k + 2.0);
    pw /= L * L;
  }
  SeriesValue out;
  out.value = acc.value();
  out.err_estimate = std::fabs(last) + 4.0 * kEps * acc.magnitude();
  out.terms_used = N;
  out.converged = out.err_estimate <= std::fmax(opts.abs_tol, opts.rel_tol * std::fabs(out.value));
  return out;
}

SeriesValue hurwitz_zeta_sderiv(int j, double s, double x, const EvalOptions& opts) {
  opts.validate();
  if (j != 1 && j != 2) throw InvalidArgument("hurwitz_zeta_sderiv: j must be 1 or 2");
  check_zeta_args(s, x, "hurwitz_zeta_sderiv");
  const auto h = detail::hurwitz_derivs(s, x, j, opts);
  return to_series(h.z[j], h);
}

double zeta_deriv_constant(int j, int m) {
  if (j < 0 || j > 2 || m < 0 || m > 16) {
    throw InvalidArgument("zeta_deriv_constant: requires j in {0,1,2}, m in [0,16]");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_pair(j, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  EvalOptions tight;
  tight.abs_tol = 1e-15;
  const auto h = detail::hurwitz_derivs(-static_cast<double>(m), 1.0, j, tight);
  const double v = static_cast<double>(h.z[j]);
  cache.emplace(key, v);
  return v;
}

double lerch_zeta_prime0(double x, const EvalOptions& opts) {
  return log_gamma(x, opts).value - kHalfLog2Pi;
}

double gosper_vardi_lhs(double x, const EvalOptions& opts) {
  if (!std::isfinite(x) || !(x > 0.0)) {
    throw DomainError("gosper_vardi_lhs: requires x > 0");
  }
  return log_barnes_g1p(x, opts).value - x * log_gamma(x, opts).value;
}

double gosper_vardi_rhs(double x, const EvalOptions& opts) {
  return zeta_deriv_constant(1, 1) - hurwitz_zeta_sderiv(1, -1.0, x, opts).value;
}

double adamchik_rhs(int n, double x, const EvalOptions& opts) {
  if (n < 0) throw DomainError("adamchik_rhs: requires n >= 0");
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("adamchik_rhs: requires x > 0");
  if (n == 0) {
    return 0.5 * (x - x * x) + x * log_gamma(x, opts).value - log_barnes_g1p(x, opts).value;
  }
  const BernoulliPoly b = bernoulli_poly(n + 1);
  const double poly = (static_cast<double>(b.constant()) - b.eval(x)) / (n * (n + 1.0));
  const double zp = hurwitz_zeta_sderiv(1, -static_cast<double>(n), x, opts).value;
  return poly + zp - zeta_deriv_constant(1, n);
}

double adamchik_dd_rhs(int n, double x, const EvalOptions& opts) {
  if (n < 1) throw DomainError("adamchik_dd_rhs: requires n >= 1");
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("adamchik_dd_rhs: requires x > 0");
  opts.validate();
  const auto h = detail::hurwitz_derivs(-static_cast<double>(n), x, 2, opts);
  const BernoulliPoly b = bernoulli_poly(n + 1);
  const double poly = (static_cast<double>(b.constant()) - b.eval(x)) / (n * (n + 1.0));
  const double first = poly + static_cast<double>(h.z[1]) - zeta_deriv_constant(1, n);
  return static_cast<double>(h.z[2]) - zeta_deriv_constant(2, n) + (2.0 / n) * first;
}

double zeta_dd0_integral_rhs(double x, const EvalOptions& opts) {
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("zeta_dd0_integral_rhs: requires x > 0");
  const double zdd = hurwitz_zeta_sderiv(2, -1.0, x, opts).value;
  const double gv = x * log_gamma(x, opts).value - log_barnes_g1p(x, opts).value;
  return zdd - zeta_deriv_constant(2, 1) + x - x * x + 2.0 * gv;
}

ZetaDD0Limit zeta_dd0_limit(std::uint64_t N) {
  if (N < 1000) throw DomainError("zeta_dd0_limit: requires N >= 1000");
  if (N > 1'000'000'000ULL) throw CapacityError("zeta_dd0_limit: N above 1e9");
  CompensatedSum sq;
  for (std::uint64_t k = 2; k <= N; ++k) {
    const double l = std::log(static_cast<double>(k));
    sq.add(l * l);
  }
  const double n = static_cast<double>(N);
  const double l1 = std::log1p(n);
  const double l0 = std::log(n);

  CompensatedSum tel(-2.0);
  tel.add(-(n + 0.5) * l1 * l1);
  tel.add(2.0 * (n + 1.0) * l1);
  tel.add(-2.0 * n);
  tel.add(sq.value());

  CompensatedSum cls(sq.value());
  cls.add(-(n + 0.5) * l0 * l0);
  cls.add(2.0 * n * l0);
  cls.add(-2.0 * n);

  ZetaDD0Limit out;
  out.N = N;
  out.telescoped = tel.value();
  out.classical = cls.value();
  out.difference = out.telescoped - out.classical;
  return out;
}

std::pair<double, double> zeta_half_relation(double s, bool derivative, const EvalOptions& opts) {
  opts.validate();
  check_zeta_args(s, 0.5, "zeta_half_relation");
  const double f = std::exp2(s) - 1.0;
  if (!derivative) {
    const double lhs = hurwitz_zeta(s, 0.5, opts).value;
    const double rhs = f * hurwitz_zeta(s, 1.0, opts).value;
    return {lhs, rhs};
  }
  const auto half = detail::hurwitz_derivs(s, 0.5, 1, opts);
  const auto one = detail::hurwitz_derivs(s, 1.0, 1, opts);
  const double lhs = static_cast<double>(half.z[1]);
  const double rhs = f * static_cast<double>(one.z[1]) +
                     std::exp2(s) * std::numbers::ln2 * static_cast<double>(one.z[0]);
  return {lhs, rhs};
}

SeriesValue log_gamma_hasse(double x, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(x) || !(x > 0.0)) throw DomainError("log_gamma_hasse: requires x > 0");
  const int M = detail::shift_count(x);
  const auto h = detail::hasse_double_sums(0.0, static_cast<detail::quad>(x) + M, 1, opts);
  // S(x) = S(x+M) - sum_{k<M} log(k+x) - M
  const quad S = h.d[1] - detail::shifted_power_log_sum(x, M, 0.0, 1) - M;
  const quad v = S + static_cast<quad>(0.5) - static_cast<quad>(x) + static_cast<quad>(kHalfLog2Pi);
  SeriesValue out;
  out.value = static_cast<double>(v);
  out.err_estimate = h.err + kEps * (std::fabs(out.value) + kHalfLog2Pi);
  out.terms_used = h.terms;
  out.converged = h.converged;
  return out;
}

SeriesValue log_barnes_hasse(double x, const EvalOptions& opts) {
  opts.validate();
  if (!std::isfinite(x) || x < 0.0) throw DomainError("log_barnes_hasse: requires x >= 0");
  const int M = detail::shift_count(x);
  const auto h = detail::hasse_double_sums(-1.0, static_cast<detail::quad>(x) + M, 1, opts);
  // D(x) = D(x+M) - 2 sum_{k<M} (k+x) log(k+x) - sum_{k<M} (k+x)
  const quad D = h.d[1] - 2 * detail::shifted_power_log_sum(x, M, 1.0, 1) -
                 detail::shifted_power_log_sum(x, M, 1.0, 0);
  double xlg = 0.0;
  SeriesValue lg;
  if (x > 0.0) {
    lg = log_gamma_hasse(x, opts);
    xlg = x * lg.value;
  } else {
    lg.converged = true;
  }
  const double b2 = x * x - x + 1.0 / 6.0;
  const quad v = -D / 2 + static_cast<quad>(xlg) + static_cast<quad>(0.25 * b2) +
                 static_cast<quad>(zeta_deriv_constant(1, 1));
  SeriesValue out;
  out.value = static_cast<double>(v);
  out.err_estimate = 0.5 * h.err + x * lg.err_estimate + 4.0 * kEps * (std::fabs(xlg) + 1.0);
  out.terms_used = h.terms;
  out.converged = h.converged && lg.converged;
  return out;
}

SeriesValue zeta_limit_at_zero(int j, int m, double x, const EvalOptions& opts) {
  opts.validate();
  if (j < 0 || j > 2) throw InvalidArgument("zeta_limit_at_zero: j must be 0, 1 or 2");
  if (m < 1) throw DomainError("zeta_limit_at_zero: requires m >= 1");
  if (!std::isfinite(x) || !(x > 0.0) || x > 0.1) {
    throw DomainError("zeta_limit_at_zero: requires 0 < x <= 0.1");
  }
  const auto h = detail::hurwitz_derivs(-static_cast<double>(m), x, j, opts);
  const double lx = std::log(x);
  double corr = std::pow(x, m);
  for (int i = 0; i < j; ++i) corr *= -lx;
  SeriesValue out = to_series(h.z[j], h);
  out.value = static_cast<double>(h.z[j] - static_cast<quad>(corr));
  return out;
}

}  // namespace dblgamma
